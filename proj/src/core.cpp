#include "mixedmoore/core.hpp"

#include "mixedmoore/error.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace mixedmoore {

namespace {

void check_index(int n, int v)
{
    if (v < 0 || v >= n)
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
}

// Builds CSR offsets/adjacency from (key, value) pairs.
void build_csr(int n, const std::vector<std::pair<int, int>>& pairs, std::vector<int>& off, std::vector<int>& adj)
{
    off.assign(n + 1, 0);
    for (const auto& [k, _] : pairs)
        ++off[k + 1];
    for (int i = 0; i < n; ++i)
        off[i + 1] += off[i];
    adj.assign(pairs.size(), 0);
    std::vector<int> pos(off.begin(), off.end() - 1);
    for (const auto& [k, v] : pairs)
        adj[pos[k]++] = v;
    for (int i = 0; i < n; ++i)
        std::sort(adj.begin() + off[i], adj.begin() + off[i + 1]);
}

} // namespace

MixedGraph MixedGraph::build(int n, std::vector<Edge> edges, std::vector<Arc> arcs)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidArgument, "negative vertex count");
    for (const auto& e : edges) {
        check_index(n, e.u);
        check_index(n, e.v);
        if (e.u == e.v)
            throw Error(ErrorKind::InvalidArgument, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is a loop");
    }
    for (const auto& a : arcs) {
        check_index(n, a.from);
        check_index(n, a.to);
    }
    std::sort(edges.begin(), edges.end());
    std::sort(arcs.begin(), arcs.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
        throw Error(ErrorKind::DuplicateElement, "edge {" + std::to_string(it->u) + "," + std::to_string(it->v) + "}");
    if (auto it = std::adjacent_find(arcs.begin(), arcs.end()); it != arcs.end())
        throw Error(ErrorKind::DuplicateElement, "arc (" + std::to_string(it->from) + "," + std::to_string(it->to) + ")");
    for (const auto& e : edges) {
        if (std::binary_search(arcs.begin(), arcs.end(), Arc{e.u, e.v})
            && std::binary_search(arcs.begin(), arcs.end(), Arc{e.v, e.u}))
            throw Error(ErrorKind::EdgeDigonClash, "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }

    MixedGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.arcs_ = std::move(arcs);

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(2 * g.edges_.size());
    for (const auto& e : g.edges_) {
        pairs.emplace_back(e.u, e.v);
        pairs.emplace_back(e.v, e.u);
    }
    build_csr(n, pairs, g.edge_off_, g.edge_adj_);

    pairs.clear();
    for (const auto& a : g.arcs_)
        pairs.emplace_back(a.from, a.to);
    build_csr(n, pairs, g.out_off_, g.out_adj_);

    pairs.clear();
    for (const auto& a : g.arcs_)
        pairs.emplace_back(a.to, a.from);
    build_csr(n, pairs, g.in_off_, g.in_adj_);
    return g;
}

bool MixedGraph::has_edge(int u, int v) const
{
    auto nb = edge_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool MixedGraph::has_arc(int u, int v) const
{
    auto nb = out_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

MixedGraph MixedGraph::relabeled(std::span<const int> perm) const
{
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& x : edges_)
        e.emplace_back(perm[x.u], perm[x.v]);
    std::vector<Arc> a;
    a.reserve(arcs_.size());
    for (const auto& x : arcs_)
        a.push_back({perm[x.from], perm[x.to]});
    return build(n_, std::move(e), std::move(a));
}

ColoredDigraph ColoredDigraph::build(int n, std::vector<ColoredArc> arcs)
{
    for (const auto& a : arcs) {
        check_index(n, a.from);
        check_index(n, a.to);
    }
    std::sort(arcs.begin(), arcs.end());
    if (auto it = std::adjacent_find(arcs.begin(), arcs.end()); it != arcs.end())
        throw Error(ErrorKind::DuplicateElement, "arc (" + std::to_string(it->from) + "," + std::to_string(it->to) + ")");
    ColoredDigraph d;
    d.n_ = n;
    d.arcs_ = std::move(arcs);
    d.off_.assign(n + 1, 0);
    for (const auto& a : d.arcs_)
        ++d.off_[a.from + 1];
    for (int i = 0; i < n; ++i)
        d.off_[i + 1] += d.off_[i];
    return d;
}

bool ColoredDigraph::has_one_factorization() const
{
    for (ArcColor c : {ArcColor::Blue, ArcColor::Red}) {
        std::vector<int> out(n_, 0), in(n_, 0);
        for (const auto& a : arcs_) {
            if (a.color == ArcColor::None)
                return false;
            if (a.color == c) {
                ++out[a.from];
                ++in[a.to];
            }
        }
        for (int v = 0; v < n_; ++v)
            if (out[v] != 1 || in[v] != 1)
                return false;
    }
    return true;
}

int ColoredDigraph::successor(int v, ArcColor color) const
{
    for (const auto& a : out_arcs(v))
        if (a.color == color)
            return a.to;
    throw Error(ErrorKind::NotOneFactorized, "vertex " + std::to_string(v) + " lacks an out-arc of the requested colour");
}

int ColoredDigraph::predecessor(int v, ArcColor color) const
{
    for (const auto& a : arcs_)
        if (a.to == v && a.color == color)
            return a.from;
    throw Error(ErrorKind::NotOneFactorized, "vertex " + std::to_string(v) + " lacks an in-arc of the requested colour");
}

MixedGraph ColoredDigraph::as_mixed() const
{
    std::vector<Arc> arcs;
    arcs.reserve(arcs_.size());
    for (const auto& a : arcs_)
        arcs.push_back({a.from, a.to});
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return MixedGraph::build(n_, {}, std::move(arcs));
}

std::optional<int> DistanceTable::eccentricity() const
{
    int ecc = 0;
    for (int d : dist) {
        if (d == unreachable)
            return std::nullopt;
        ecc = std::max(ecc, d);
    }
    return ecc;
}

bool is_totally_regular(const MixedGraph& g, int r, int z)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.undirected_degree(v) != r || g.out_degree(v) != z || g.in_degree(v) != z)
            return false;
    return true;
}

namespace {

// BFS into caller-owned buffers; returns the eccentricity or -1.
int bfs_into(const MixedGraph& g, int source, std::vector<int>& dist, std::vector<int>& queue)
{
    const int n = g.order();
    dist.assign(n, DistanceTable::unreachable);
    queue.resize(n);
    int head = 0, tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    while (head < tail) {
        const int u = queue[head++];
        const int du = dist[u] + 1;
        for (int w : g.edge_neighbors(u))
            if (dist[w] < 0) {
                dist[w] = du;
                queue[tail++] = w;
            }
        for (int w : g.out_neighbors(u))
            if (dist[w] < 0) {
                dist[w] = du;
                queue[tail++] = w;
            }
    }
    if (tail < n)
        return -1;
    return dist[queue[n - 1]];
}

} // namespace

DistanceTable bfs(const MixedGraph& g, int source)
{
    check_index(g.order(), source);
    DistanceTable t;
    t.source = source;
    std::vector<int> queue;
    bfs_into(g, source, t.dist, queue);
    return t;
}

std::optional<int> diameter(const MixedGraph& g, int jobs)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    jobs = std::clamp(jobs, 1, n);
    std::atomic<int> next{0};
    std::atomic<bool> disconnected{false};
    std::vector<int> best(jobs, 0);
    auto worker = [&](int slot) {
        std::vector<int> dist, queue;
        for (int s = next++; s < n && !disconnected; s = next++) {
            int ecc = bfs_into(g, s, dist, queue);
            if (ecc < 0) {
                disconnected = true;
                return;
            }
            best[slot] = std::max(best[slot], ecc);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back(worker, j);
        for (auto& t : threads)
            t.join();
    }
    if (disconnected)
        return std::nullopt;
    return *std::max_element(best.begin(), best.end());
}

std::vector<BinaryMatrix> distance_matrices(const MixedGraph& g, int k)
{
    const int n = g.order();
    std::vector<BinaryMatrix> mats(k + 1, BinaryMatrix(n, std::vector<std::uint8_t>(n, 0)));
    std::vector<int> dist, queue;
    for (int u = 0; u < n; ++u) {
        bfs_into(g, u, dist, queue);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0 || dist[v] > k)
                throw Error(ErrorKind::DiameterExceedsK, "dist(" + std::to_string(u) + "," + std::to_string(v) + ") exceeds " + std::to_string(k));
            mats[dist[v]][u][v] = 1;
        }
    }
    return mats;
}

std::vector<std::vector<long long>> adjacency_matrix(const MixedGraph& g)
{
    const int n = g.order();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (const auto& e : g.edges()) {
        a[e.u][e.v] = 1;
        a[e.v][e.u] = 1;
    }
    for (const auto& x : g.arcs())
        a[x.from][x.to] = 1;
    return a;
}

DigonLoopCount digons_and_loops(const MixedGraph& g)
{
    DigonLoopCount c;
    for (const auto& a : g.arcs()) {
        if (a.from == a.to)
            ++c.loops;
        else if (a.from < a.to && g.has_arc(a.to, a.from))
            ++c.digons;
    }
    return c;
}

ColoredDigraph contract_edges(const MixedGraph& g)
{
    const int n = g.order();
    std::vector<int> block(n, -1);
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        for (int v : {edges[i].u, edges[i].v}) {
            if (block[v] >= 0)
                throw Error(ErrorKind::NotAPerfectMatching, "vertex " + std::to_string(v) + " lies on two edges");
            block[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (block[v] < 0)
            throw Error(ErrorKind::NotAPerfectMatching, "vertex " + std::to_string(v) + " is unmatched");
    std::vector<ColoredArc> arcs;
    for (const auto& a : g.arcs())
        arcs.push_back({block[a.from], block[a.to], ArcColor::None});
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return ColoredDigraph::build(static_cast<int>(edges.size()), std::move(arcs));
}

MixedGraph digons_to_edges(const MixedGraph& digraph)
{
    std::vector<Edge> edges(digraph.edges());
    std::vector<Arc> arcs;
    for (const auto& a : digraph.arcs()) {
        if (a.from != a.to && digraph.has_arc(a.to, a.from)) {
            if (a.from < a.to)
                edges.emplace_back(a.from, a.to);
        } else {
            arcs.push_back(a);
        }
    }
    return MixedGraph::build(digraph.order(), std::move(edges), std::move(arcs));
}

bool is_strongly_connected(const MixedGraph& g)
{
    if (g.order() == 0)
        return true;
    // Forward reachability from 0 plus reachability in the reversed graph.
    const int n = g.order();
    auto sweep = [&](bool reverse) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            };
            for (int w : g.edge_neighbors(u))
                visit(w);
            for (int w : reverse ? g.in_neighbors(u) : g.out_neighbors(u))
                visit(w);
        }
        return count == n;
    };
    return sweep(false) && sweep(true);
}

int connected_components(const MixedGraph& g)
{
    const int n = g.order();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& e : g.edges())
        unite(e.u, e.v);
    for (const auto& a : g.arcs())
        unite(a.from, a.to);
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i)
            ++c;
    return c;
}

} // namespace mixedmoore
