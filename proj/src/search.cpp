#include "mixedmoore/search.hpp"

#include "mixedmoore/bounds.hpp"
#include "mixedmoore/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <thread>

namespace mixedmoore::search {

namespace {

using Mask = std::uint64_t;

constexpr int max_order = 64;

Mask bit(int v)
{
    return Mask{1} << v;
}

// A partial (1,1)-mixed graph whose matching is complete.
struct Unit {
    int n = 0;
    std::vector<int> partner;
    std::vector<int> out; // -1 where the arc is still missing
};

struct Task {
    std::size_t unit = 0;
    std::vector<std::pair<int, int>> prefix;
};

struct TaskResult {
    std::uint64_t examined = 0;
    std::map<CanonicalForm, MixedGraph> survivors;
};

// Smallest t with every vertex reaching every vertex in t steps, or -1 if
// that does not happen within limit steps.
int bitmask_diameter(const std::vector<Mask>& adj, int n, int limit)
{
    const Mask full = n == 64 ? ~Mask{0} : bit(n) - 1;
    int worst = 0;
    for (int u = 0; u < n; ++u) {
        Mask seen = bit(u), frontier = seen;
        int t = 0;
        while (seen != full) {
            if (t == limit)
                return -1;
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj[std::countr_zero(f)];
            frontier = next & ~seen;
            if (!frontier)
                return -1;
            seen |= frontier;
            ++t;
        }
        worst = std::max(worst, t);
    }
    return worst;
}

class Completer {
public:
    Completer(const Unit& unit, int k, std::atomic<std::uint64_t>& global, std::uint64_t budget,
        std::atomic<bool>& stop)
        : u_(unit), k_(k), global_(global), budget_(budget), stop_(stop), out_(unit.out), in_src_(unit.n, -1),
          adj_(unit.n)
    {
        for (int v = 0; v < u_.n; ++v) {
            if (out_[v] >= 0)
                in_src_[out_[v]] = v;
            else
                sources_.push_back(v);
        }
        for (int v = 0; v < u_.n; ++v)
            if (in_src_[v] < 0)
                free_in_ |= bit(v);
    }

    const std::vector<int>& sources() const { return sources_; }

    bool allowed(int v, int t) const
    {
        return (free_in_ & bit(t)) && t != v && t != u_.partner[v] && out_[t] != v;
    }

    void assign(int v, int t)
    {
        out_[v] = t;
        in_src_[t] = v;
        free_in_ &= ~bit(t);
    }

    void unassign(int v)
    {
        const int t = out_[v];
        out_[v] = -1;
        in_src_[t] = -1;
        free_in_ |= bit(t);
    }

    // Every completion is a subgraph of the graph in which each missing arc
    // is replaced by all still admissible ones.
    bool feasible()
    {
        for (int v = 0; v < u_.n; ++v) {
            Mask a = bit(u_.partner[v]);
            if (out_[v] >= 0) {
                a |= bit(out_[v]);
            } else {
                Mask cand = free_in_ & ~bit(v) & ~bit(u_.partner[v]);
                if (in_src_[v] >= 0)
                    cand &= ~bit(in_src_[v]);
                a |= cand;
            }
            adj_[v] = a;
        }
        return bitmask_diameter(adj_, u_.n, k_) >= 0;
    }

    void run(std::size_t pos, TaskResult& result)
    {
        if (stop_.load(std::memory_order_relaxed))
            return;
        if (pos == sources_.size()) {
            leaf(result);
            return;
        }
        const int v = sources_[pos];
        for (Mask f = free_in_; f; f &= f - 1) {
            const int t = std::countr_zero(f);
            if (!allowed(v, t))
                continue;
            assign(v, t);
            if (feasible())
                run(pos + 1, result);
            unassign(v);
        }
    }

    // Prefixes of the given depth, in enumeration order.
    void prefixes(std::size_t pos, std::size_t depth, std::vector<std::pair<int, int>>& cur,
        std::vector<std::vector<std::pair<int, int>>>& out)
    {
        if (pos == depth) {
            out.push_back(cur);
            return;
        }
        const int v = sources_[pos];
        for (Mask f = free_in_; f; f &= f - 1) {
            const int t = std::countr_zero(f);
            if (!allowed(v, t))
                continue;
            assign(v, t);
            if (feasible()) {
                cur.emplace_back(v, t);
                prefixes(pos + 1, depth, cur, out);
                cur.pop_back();
            }
            unassign(v);
        }
    }

private:
    void leaf(TaskResult& result)
    {
        if (budget_ > 0) {
            if (global_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
                stop_.store(true);
                return;
            }
        }
        ++result.examined;
        for (int v = 0; v < u_.n; ++v)
            adj_[v] = bit(u_.partner[v]) | bit(out_[v]);
        if (bitmask_diameter(adj_, u_.n, k_) != k_)
            return;
        std::vector<Edge> edges;
        std::vector<Arc> arcs;
        for (int v = 0; v < u_.n; ++v) {
            if (v < u_.partner[v])
                edges.emplace_back(v, u_.partner[v]);
            arcs.push_back({v, out_[v]});
        }
        const MixedGraph g = MixedGraph::build(u_.n, std::move(edges), std::move(arcs));
        auto lab = canonical_labeling(g, default_mode(g));
        if (!result.survivors.count(lab.form))
            result.survivors.emplace(lab.form, g.relabeled(lab.position));
    }

    const Unit& u_;
    int k_;
    std::atomic<std::uint64_t>& global_;
    std::uint64_t budget_;
    std::atomic<bool>& stop_;
    std::vector<int> out_;
    std::vector<int> in_src_;
    std::vector<int> sources_;
    Mask free_in_ = 0;
    std::vector<Mask> adj_;
};

SearchOutcome run_units(const std::vector<Unit>& units, int k, const SearchOptions& opts)
{
    std::atomic<std::uint64_t> global{0};
    std::atomic<bool> stop{false};
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < units.size(); ++i) {
        Completer c(units[i], k, global, 0, stop);
        if (!c.feasible())
            continue;
        const std::size_t depth = std::min<std::size_t>(std::max(0, opts.shard_depth), c.sources().size());
        std::vector<std::vector<std::pair<int, int>>> pre;
        std::vector<std::pair<int, int>> cur;
        c.prefixes(0, depth, cur, pre);
        for (auto& p : pre)
            tasks.push_back({i, std::move(p)});
    }
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            const Task& t = tasks[i];
            Completer c(units[t.unit], k, global, opts.budget, stop);
            for (const auto& [v, w] : t.prefix)
                c.assign(v, w);
            c.run(t.prefix.size(), results[i]);
        }
    };
    const int threads = std::max(1, opts.jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    SearchOutcome out;
    out.k = k;
    out.order = units.empty() ? 0 : units.front().n;
    std::map<CanonicalForm, MixedGraph> merged;
    for (auto& r : results) {
        out.examined += r.examined;
        for (auto& [form, g] : r.survivors)
            merged.emplace(form, std::move(g));
    }
    for (auto& [form, g] : merged)
        out.survivors.push_back({form, std::move(g)});
    out.budget_exhausted = stop.load();
    return out;
}

void perfect_matchings(std::vector<int>& partner, const std::vector<int>& free, std::size_t i,
    const std::vector<int>& out, std::uint64_t& count, std::vector<std::vector<int>>& valid)
{
    while (i < free.size() && partner[free[i]] >= 0)
        ++i;
    if (i == free.size()) {
        ++count;
        for (int v : free)
            if (out[v] == partner[v] || out[partner[v]] == v)
                return;
        valid.push_back(partner);
        return;
    }
    const int a = free[i];
    for (std::size_t j = i + 1; j < free.size(); ++j) {
        const int b = free[j];
        if (partner[b] >= 0)
            continue;
        partner[a] = b;
        partner[b] = a;
        perfect_matchings(partner, free, i + 1, out, count, valid);
        partner[a] = partner[b] = -1;
    }
}

// Units from the Moore tree with the given words deleted.
std::vector<Unit> pruned_tree_units(const MooreTree& tree, const std::vector<std::string>& removed, std::uint64_t& matchings)
{
    const int m = static_cast<int>(tree.words.size());
    std::vector<int> index(m, -1);
    int n = 0;
    for (int i = 0; i < m; ++i)
        if (std::find(removed.begin(), removed.end(), tree.words[i]) == removed.end())
            index[i] = n++;
    if (n > max_order)
        throw Error(ErrorKind::TooLarge, "search limited to order 64");
    std::vector<int> partner(n, -1), out(n, -1);
    for (const auto& e : tree.edges)
        if (index[e.u] >= 0 && index[e.v] >= 0) {
            partner[index[e.u]] = index[e.v];
            partner[index[e.v]] = index[e.u];
        }
    for (const auto& a : tree.arcs)
        if (index[a.from] >= 0 && index[a.to] >= 0)
            out[index[a.from]] = index[a.to];
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (partner[v] < 0)
            free.push_back(v);
    std::vector<Unit> units;
    if (free.size() % 2 != 0)
        return units;
    std::vector<std::vector<int>> valid;
    perfect_matchings(partner, free, 0, out, matchings, valid);
    for (auto& p : valid)
        units.push_back({n, std::move(p), out});
    return units;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int MooreTree::index_of(std::string_view word) const
{
    auto it = std::find(words.begin(), words.end(), word);
    return it == words.end() ? -1 : static_cast<int>(it - words.begin());
}

MixedGraph MooreTree::graph() const
{
    return MixedGraph::build(static_cast<int>(words.size()), edges, arcs);
}

MooreTree moore_tree(int k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "Moore tree depth must be at least 1");
    if (k > 30)
        throw Error(ErrorKind::TooLarge, "Moore tree depth limited to 30");
    MooreTree t;
    t.k = k;
    t.words.push_back("");
    t.level_start = {0, 1};
    for (int level = 1; level <= k; ++level) {
        const int begin = t.level_start[level - 1], end = t.level_start[level];
        std::vector<std::string> next;
        for (int i = begin; i < end; ++i) {
            const std::string& w = t.words[i];
            if (w.empty() || w.back() != '0')
                next.push_back(w + '0');
            next.push_back(w + '1');
        }
        std::sort(next.begin(), next.end());
        for (auto& w : next)
            t.words.push_back(std::move(w));
        t.level_start.push_back(static_cast<int>(t.words.size()));
    }
    for (int i = 0; i < t.level_start[k]; ++i) {
        const std::string& w = t.words[i];
        if (w.empty() || w.back() != '0')
            t.edges.emplace_back(i, t.index_of(w + '0'));
        t.arcs.push_back({i, t.index_of(w + '1')});
    }
    return t;
}

SearchOutcome search_almost_moore(int k, const SearchOptions& opts)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidArgument, "diameter must be at least 2");
    if (k >= 5 && opts.budget == 0)
        throw Error(ErrorKind::InvalidArgument, "k >= 5 needs an explicit budget");
    const auto t0 = Clock::now();
    const MooreTree tree = moore_tree(k);
    std::vector<Unit> units;
    std::uint64_t matchings = 0;
    std::uint64_t cases = 0;
    for (int i = tree.level_start[k]; i < tree.level_start[k + 1]; ++i) {
        ++cases;
        auto u = pruned_tree_units(tree, {tree.words[i]}, matchings);
        for (auto& x : u)
            units.push_back(std::move(x));
    }
    SearchOutcome out = run_units(units, k, opts);
    out.order = static_cast<int>(tree.words.size()) - 1;
    out.removal_cases = cases;
    out.matching_completions = matchings;
    out.seconds = since(t0);
    return out;
}

std::vector<std::vector<std::string>> order16_removal_sets()
{
    const MooreTree tree = moore_tree(4);
    std::vector<std::string> leaves(tree.words.begin() + tree.level_start[4], tree.words.end());
    std::vector<std::vector<std::string>> sets;
    for (std::size_t a = 0; a < leaves.size(); ++a)
        for (std::size_t b = a + 1; b < leaves.size(); ++b)
            for (std::size_t c = b + 1; c < leaves.size(); ++c)
                sets.push_back({leaves[a], leaves[b], leaves[c]});
    for (int i = tree.level_start[3]; i < tree.level_start[4]; ++i) {
        const std::string& w = tree.words[i];
        if (w.back() == '0') {
            for (const auto& other : leaves)
                if (other != w + '1')
                    sets.push_back({w, w + '1', other});
        } else {
            sets.push_back({w, w + '0', w + '1'});
        }
    }
    return sets;
}

SearchOutcome search_order16_k4(const SearchOptions& opts)
{
    const auto t0 = Clock::now();
    const MooreTree tree = moore_tree(4);
    std::vector<Unit> units;
    std::uint64_t matchings = 0;
    const auto sets = order16_removal_sets();
    for (const auto& s : sets) {
        auto u = pruned_tree_units(tree, s, matchings);
        for (auto& x : u)
            units.push_back(std::move(x));
    }
    SearchOutcome out = run_units(units, 4, opts);
    out.order = 16;
    out.removal_cases = sets.size();
    out.matching_completions = matchings;
    out.seconds = since(t0);
    return out;
}

SearchOutcome search_generic(int order, int k, const std::vector<Arc>& seeds, const SearchOptions& opts)
{
    if (order < 2 || order % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "order must be even and at least 2");
    if (order > max_order)
        throw Error(ErrorKind::TooLarge, "search limited to order 64");
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "diameter must be positive");
    const auto t0 = Clock::now();
    Unit u;
    u.n = order;
    u.partner.resize(order);
    u.out.assign(order, -1);
    for (int v = 0; v < order; ++v)
        u.partner[v] = v ^ 1;
    std::vector<bool> entered(order, false);
    for (const auto& a : seeds) {
        if (a.from < 0 || a.from >= order || a.to < 0 || a.to >= order)
            throw Error(ErrorKind::IndexOutOfRange, "seed arc outside 0.." + std::to_string(order - 1));
        if (a.from == a.to || a.to == u.partner[a.from])
            throw Error(ErrorKind::InvalidArgument, "seed arc is a loop or parallel to a matching edge");
        if (u.out[a.from] >= 0 || entered[a.to])
            throw Error(ErrorKind::DuplicateElement, "seed arcs must have distinct tails and heads");
        if (u.out[a.to] == a.from)
            throw Error(ErrorKind::InvalidArgument, "seed arcs form a digon");
        u.out[a.from] = a.to;
        entered[a.to] = true;
    }
    SearchOutcome out = run_units({u}, k, opts);
    out.order = order;
    out.removal_cases = 1;
    out.matching_completions = 1;
    out.seconds = since(t0);
    return out;
}

SearchOutcome search_order14_k4(const SearchOptions& opts)
{
    return search_generic(14, 4, {{0, 2}, {1, 5}, {5, 7}}, opts);
}

} // namespace mixedmoore::search
