#include "mixedmoore/families.hpp"

#include "mixedmoore/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace mixedmoore::families {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::InvalidArgument, what);
}

int mod(long long x, long long m)
{
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

std::string sign_label(int a)
{
    return a > 0 ? "+1" : "-1";
}

// Vertices a|x_1..x_n of F(n) and F*(n) in a fixed order.
struct TernaryWords {
    std::vector<int> sign;               // +1 / -1
    std::vector<std::vector<int>> digits;
    std::map<std::pair<int, std::vector<int>>, int> index;

    explicit TernaryWords(int n)
    {
        std::vector<std::vector<int>> words{{0}, {1}, {2}};
        for (int len = 1; len < n; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : words)
                for (int x = 0; x < 3; ++x)
                    if (x != w.back()) {
                        next.push_back(w);
                        next.back().push_back(x);
                    }
            words = std::move(next);
        }
        for (int a : {+1, -1})
            for (const auto& w : words) {
                index[{a, w}] = static_cast<int>(sign.size());
                sign.push_back(a);
                digits.push_back(w);
            }
    }

    int size() const { return static_cast<int>(sign.size()); }
    int at(int a, const std::vector<int>& w) const { return index.at({a, w}); }

    std::vector<std::string> labels() const
    {
        std::vector<std::string> out;
        for (int v = 0; v < size(); ++v) {
            std::string s = sign_label(sign[v]) + "|";
            for (int x : digits[v])
                s += static_cast<char>('0' + x);
            out.push_back(std::move(s));
        }
        return out;
    }
};

LabeledMixedGraph ternary_family(int n, bool star)
{
    TernaryWords tw(n);
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (int v = 0; v < tw.size(); ++v) {
        const int a = tw.sign[v];
        const auto& x = tw.digits[v];
        if (a > 0)
            edges.emplace_back(v, tw.at(-a, x));
        int step = a;
        if (star)
            step = a * (mod(x[1] - x[0], 3) == 1 ? 1 : -1);
        std::vector<int> y(x.begin() + 1, x.end());
        y.push_back(mod(x.back() + step, 3));
        arcs.push_back({v, tw.at(a, y)});
    }
    return {MixedGraph::build(tw.size(), std::move(edges), std::move(arcs)), tw.labels()};
}

// Removes every vertex that sits on a loop or a digon and joins the orphaned
// edge partners: partners of the two endpoints of a digon, and partners of
// loop vertices taken in pairs.
LabeledMixedGraph remove_exceptional(const LabeledMixedGraph& src)
{
    const MixedGraph& g = src.graph;
    const int n = g.order();
    std::vector<char> removed(n, 0);
    std::vector<std::pair<int, int>> digons;
    std::vector<int> loops;
    for (const auto& a : g.arcs()) {
        if (a.from == a.to) {
            loops.push_back(a.from);
            removed[a.from] = 1;
        } else if (a.from < a.to && g.has_arc(a.to, a.from)) {
            digons.emplace_back(a.from, a.to);
            removed[a.from] = removed[a.to] = 1;
        }
    }
    require(loops.size() % 2 == 0, "odd number of loop vertices");
    auto partner = [&](int v) {
        auto nb = g.edge_neighbors(v);
        require(nb.size() == 1, "exceptional vertex without a unique edge partner");
        require(!removed[nb[0]], "edge partner of an exceptional vertex is exceptional too");
        return nb[0];
    };
    std::vector<std::pair<int, int>> joins;
    for (const auto& [u, v] : digons)
        joins.emplace_back(partner(u), partner(v));
    for (std::size_t i = 0; i < loops.size(); i += 2)
        joins.emplace_back(partner(loops[i]), partner(loops[i + 1]));

    std::vector<int> index(n, -1);
    LabeledMixedGraph out;
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            index[v] = next++;
            out.labels.push_back(src.labels[v]);
        }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!removed[e.u] && !removed[e.v])
            edges.emplace_back(index[e.u], index[e.v]);
    for (const auto& [u, v] : joins)
        edges.emplace_back(index[u], index[v]);
    std::vector<Arc> arcs;
    for (const auto& a : g.arcs())
        if (!removed[a.from] && !removed[a.to])
            arcs.push_back({index[a.from], index[a.to]});
    out.graph = MixedGraph::build(next, std::move(edges), std::move(arcs));
    return out;
}

// Index helpers for F*(n) in the a|b:a_1..a_{n-1} presentation.
struct AltIndex {
    int n;
    int size() const { return 2 * 3 * (1 << (n - 1)); }
    // bit i of mask set <=> a_{i+1} = -1
    int at(int a, int b, int mask) const { return ((a > 0 ? 0 : 1) * 3 + b) * (1 << (n - 1)) + mask; }
    int sign(int v) const { return v / (3 * (1 << (n - 1))) == 0 ? 1 : -1; }
    int base(int v) const { return (v / (1 << (n - 1))) % 3; }
    int mask(int v) const { return v % (1 << (n - 1)); }
    int step(int v, int i) const { return (mask(v) >> i) & 1 ? -1 : 1; }
};

// G+(n) vertex x_0|x_1..x_n has index x_0 * 2^n + (x_1..x_n read big-endian).
int gplus_arc_target(int n, int v)
{
    const int x0 = v >> n;
    const int word = v & ((1 << n) - 1);
    const int x1 = (word >> (n - 1)) & 1;
    const int shifted = ((word << 1) & ((1 << n) - 1)) | (x1 ^ x0);
    return (x0 << n) | shifted;
}

} // namespace

int LabeledMixedGraph::index_of(std::string_view label) const
{
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        if (labels[v] == label)
            return v;
    return -1;
}

LabeledMixedGraph build_E(int n)
{
    require(n >= 2, "E(n) needs n >= 2");
    // Words without "00"; the empty word is the root.
    std::vector<std::string> words{""};
    std::vector<int> level_start{0};
    for (int len = 1; len <= n; ++len) {
        level_start.push_back(static_cast<int>(words.size()));
        for (int i = level_start[len - 1]; i < level_start[len]; ++i) {
            const std::string w = words[i];
            if (w.empty() || w.back() != '0')
                words.push_back(w + "0");
            words.push_back(w + "1");
        }
    }
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(words.size()); ++i)
        index[words[i]] = i;

    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::vector<int> matchable;
    for (int i = 0; i < static_cast<int>(words.size()); ++i) {
        const std::string& w = words[i];
        if (static_cast<int>(w.size()) < n) {
            if (w.empty() || w.back() != '0')
                edges.emplace_back(i, index.at(w + "0"));
            arcs.push_back({i, index.at(w + "1")});
        } else {
            arcs.push_back({i, 0});
            if (w.back() == '1')
                matchable.push_back(i);
        }
    }
    // With f_n odd the first leaf (lexicographically) is left unmatched.
    int v1 = -1;
    if (matchable.size() % 2 == 1) {
        v1 = matchable.front();
        matchable.erase(matchable.begin());
    }
    for (std::size_t i = 0; i + 1 < matchable.size(); i += 2)
        edges.emplace_back(matchable[i], matchable[i + 1]);

    std::vector<std::string> labels;
    for (const auto& w : words)
        labels.push_back(w.empty() ? "root" : w);
    int order = static_cast<int>(words.size());
    if (v1 >= 0) {
        const int v2 = order++;
        edges.emplace_back(v1, v2);
        arcs.push_back({v2, 0});
        labels.push_back("v2");
    }
    return {MixedGraph::build(order, std::move(edges), std::move(arcs)), std::move(labels)};
}

LabeledMixedGraph build_F(int n)
{
    require(n >= 2, "F(n) needs n >= 2");
    return ternary_family(n, false);
}

LabeledMixedGraph build_F_numeric(int n)
{
    require(n >= 1 && n <= 24, "F[n] needs 1 <= n <= 24");
    const int m = 3 * (1 << (n - 1));
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::vector<std::string> labels;
    // alpha|i has index (alpha - 1) * m + i.
    for (int alpha = 1; alpha <= 2; ++alpha)
        for (int i = 0; i < m; ++i) {
            const int v = (alpha - 1) * m + i;
            labels.push_back(std::to_string(alpha) + "|" + std::to_string(i));
            if (alpha == 1)
                edges.emplace_back(v, m + i);
            arcs.push_back({v, (alpha - 1) * m + mod(-2LL * i + alpha, m)});
        }
    return {MixedGraph::build(2 * m, std::move(edges), std::move(arcs)), std::move(labels)};
}

std::vector<int> f_flip_automorphism(int n)
{
    require(n >= 2, "F(n) needs n >= 2");
    TernaryWords tw(n);
    std::vector<int> perm(tw.size());
    for (int v = 0; v < tw.size(); ++v) {
        std::vector<int> y = tw.digits[v];
        for (int& x : y)
            x = x == 2 ? 2 : 1 - x;
        perm[v] = tw.at(-tw.sign[v], y);
    }
    return perm;
}

std::vector<int> f_to_numeric_map(int n)
{
    require(n >= 2, "F(n) needs n >= 2");
    TernaryWords tw(n);
    auto alpha = [](int a) { return (a + 3) / 2; };
    auto pi = [&](const std::vector<int>& x) {
        // Two-digit table, then pi_j = -2 pi_{j-1} + alpha(x_j - x_{j-1}) mod 3*2^{j-1}.
        static const std::map<std::pair<int, int>, int> base{
            {{0, 1}, 0}, {{1, 0}, 1}, {{1, 2}, 2}, {{2, 1}, 3}, {{2, 0}, 4}, {{0, 2}, 5}};
        long long p = base.at({x[0], x[1]});
        for (std::size_t j = 2; j < x.size(); ++j) {
            const long long m = 3LL << (j);
            const int diff = mod(x[j] - x[j - 1], 3) == 1 ? 1 : -1;
            p = mod(-2 * p + alpha(diff), m);
        }
        return static_cast<int>(p);
    };
    const int m = 3 * (1 << (n - 1));
    std::vector<int> map(tw.size());
    for (int v = 0; v < tw.size(); ++v)
        map[v] = (alpha(tw.sign[v]) - 1) * m + pi(tw.digits[v]);
    return map;
}

LabeledMixedGraph build_Fstar(int n)
{
    require(n >= 2, "F*(n) needs n >= 2");
    return ternary_family(n, true);
}

LabeledMixedGraph build_Fstar_alt(int n)
{
    require(n >= 2 && n <= 20, "F*(n) needs 2 <= n <= 20");
    AltIndex ix{n};
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::vector<std::string> labels(ix.size());
    for (int v = 0; v < ix.size(); ++v) {
        const int a = ix.sign(v), b = ix.base(v), mask = ix.mask(v);
        std::string s = sign_label(a) + "|" + std::to_string(b) + ":";
        for (int i = 0; i < n - 1; ++i)
            s += ix.step(v, i) > 0 ? '+' : '-';
        labels[v] = std::move(s);
        if (a > 0)
            edges.emplace_back(v, ix.at(-a, b, mask));
        const int a1 = ix.step(v, 0);
        int next_mask = mask >> 1;
        if (a * a1 < 0)
            next_mask |= 1 << (n - 2);
        arcs.push_back({v, ix.at(a, mod(b + a1, 3), next_mask)});
    }
    return {MixedGraph::build(ix.size(), std::move(edges), std::move(arcs)), std::move(labels)};
}

std::vector<int> fstar_alt_phi(int n)
{
    require(n >= 2 && n <= 20, "F*(n) needs 2 <= n <= 20");
    AltIndex ix{n};
    std::vector<int> perm(ix.size());
    const int all = (1 << (n - 1)) - 1;
    for (int v = 0; v < ix.size(); ++v) {
        const int b = ix.base(v);
        perm[v] = ix.at(ix.sign(v), b == 2 ? 2 : 1 - b, ix.mask(v) ^ all);
    }
    return perm;
}

std::vector<int> fstar_alt_psi(int n)
{
    require(n >= 2 && n <= 20, "F*(n) needs 2 <= n <= 20");
    AltIndex ix{n};
    std::vector<int> perm(ix.size());
    for (int v = 0; v < ix.size(); ++v)
        perm[v] = ix.at(ix.sign(v), (ix.base(v) + 1) % 3, ix.mask(v));
    return perm;
}

LabeledMixedGraph build_Fprime(int n)
{
    require(n >= 2, "F'(n) needs n >= 2");
    return remove_exceptional(build_Fstar(n));
}

LabeledMixedGraph build_Gplus(int n)
{
    require(n >= 1 && n <= 24, "G+(n) needs 1 <= n <= 24");
    const int size = 2 << n;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::vector<std::string> labels(size);
    for (int v = 0; v < size; ++v) {
        std::string s = std::to_string(v >> n) + "|";
        for (int i = n - 1; i >= 0; --i)
            s += static_cast<char>('0' + ((v >> i) & 1));
        labels[v] = std::move(s);
        if ((v >> n) == 0)
            edges.emplace_back(v, v | (1 << n));
        arcs.push_back({v, gplus_arc_target(n, v)});
    }
    return {MixedGraph::build(size, std::move(edges), std::move(arcs)), std::move(labels)};
}

LabeledMixedGraph build_G(int n)
{
    require(n >= 2, "G(n) needs n >= 2");
    return remove_exceptional(build_Gplus(n));
}

std::vector<int> gplus_edge_step(int n)
{
    require(n >= 1 && n <= 24, "G+(n) needs 1 <= n <= 24");
    std::vector<int> map(2 << n);
    for (int v = 0; v < static_cast<int>(map.size()); ++v)
        map[v] = v ^ (1 << n);
    return map;
}

std::vector<int> gplus_arc_step(int n)
{
    require(n >= 1 && n <= 24, "G+(n) needs 1 <= n <= 24");
    std::vector<int> map(2 << n);
    for (int v = 0; v < static_cast<int>(map.size()); ++v)
        map[v] = gplus_arc_target(n, v);
    return map;
}

std::vector<int> gplus_digit_flip(int n, unsigned mask)
{
    require(n >= 1 && n <= 24, "G+(n) needs 1 <= n <= 24");
    require(mask < (1u << n), "flip mask has more than n bits");
    int word = 0;
    for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1)
            word |= 1 << (n - i);
    std::vector<int> map(2 << n);
    for (int v = 0; v < static_cast<int>(map.size()); ++v)
        map[v] = v ^ word;
    return map;
}

unsigned gplus_shift_mask(int n, unsigned mask)
{
    require(n >= 1 && n <= 24, "G+(n) needs 1 <= n <= 24");
    return (mask >> 1) | ((mask & 1u) << (n - 1));
}

LabeledMixedGraph build_H(int n, const ColoredDigraph& base)
{
    require(n >= 3 && n <= 24, "H_n needs 3 <= n <= 24");
    if (!base.has_one_factorization())
        throw Error(ErrorKind::NotOneFactorized, "base digraph has no blue/red 1-factorization");
    if (!is_strongly_connected(base.as_mixed()))
        throw Error(ErrorKind::NotStronglyConnected, "base digraph is not strongly connected");

    // A walk is its start vertex and its n-1 colours; bit i of the colour
    // mask set <=> step i+1 is red (most significant step first).
    const int steps = n - 1;
    const int per_start = 1 << steps;
    const int order = base.order() * per_start;
    auto color_of = [&](int mask, int i) { return (mask >> (steps - 1 - i)) & 1 ? ArcColor::Red : ArcColor::Blue; };
    auto walk = [&](int v) {
        std::vector<int> xs{v / per_start};
        const int mask = v % per_start;
        for (int i = 0; i < steps; ++i)
            xs.push_back(base.successor(xs.back(), color_of(mask, i)));
        return xs;
    };

    bool parallel = false;
    for (int u = 0; u < base.order(); ++u)
        if (base.successor(u, ArcColor::Blue) == base.successor(u, ArcColor::Red))
            parallel = true;

    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::vector<std::string> labels(order);
    for (int v = 0; v < order; ++v) {
        const int mask = v % per_start;
        const auto xs = walk(v);
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i > 0 && base.order() > 10)
                s += ',';
            s += std::to_string(xs[i]);
        }
        if (parallel) {
            s += '/';
            for (int i = 0; i < steps; ++i)
                s += color_of(mask, i) == ArcColor::Red ? 'r' : 'b';
        }
        labels[v] = std::move(s);

        // Edge: replace x_1 by the in-neighbour of x_2 along the other colour.
        const ArcColor c1 = color_of(mask, 0);
        const ArcColor other = c1 == ArcColor::Blue ? ArcColor::Red : ArcColor::Blue;
        const int y1 = base.predecessor(xs[1], other);
        const int partner = y1 * per_start + (mask ^ (1 << (steps - 1)));
        if (v < partner)
            edges.emplace_back(v, partner);

        const ArcColor last = color_of(mask, steps - 1);
        const int appended = c1 == last ? 1 : 0;
        const int next_mask = ((mask << 1) & (per_start - 1)) | appended;
        arcs.push_back({v, xs[1] * per_start + next_mask});
    }
    return {MixedGraph::build(order, std::move(edges), std::move(arcs)), std::move(labels)};
}

ColoredDigraph symmetric_cycle(int m)
{
    require(m >= 3, "symmetric cycle needs m >= 3");
    std::vector<ColoredArc> arcs;
    for (int i = 0; i < m; ++i) {
        arcs.push_back({i, (i + 1) % m, ArcColor::Blue});
        arcs.push_back({i, (i + m - 1) % m, ArcColor::Red});
    }
    return ColoredDigraph::build(m, std::move(arcs));
}

ColoredDigraph line_digraph(const ColoredDigraph& d)
{
    const auto& in = d.arcs();
    require(!in.empty(), "line digraph of an arcless digraph");
    std::vector<ColoredArc> arcs;
    for (int i = 0; i < static_cast<int>(in.size()); ++i) {
        const int head = in[i].to;
        // out_arcs(head) is a contiguous block of the sorted arc list.
        const int first = static_cast<int>(d.out_arcs(head).data() - in.data());
        for (int j = first; j < first + static_cast<int>(d.out_arcs(head).size()); ++j) {
            ArcColor c = ArcColor::None;
            if (in[i].color != ArcColor::None && in[j].color != ArcColor::None)
                c = in[i].color == in[j].color ? ArcColor::Blue : ArcColor::Red;
            arcs.push_back({i, j, c});
        }
    }
    return ColoredDigraph::build(static_cast<int>(in.size()), std::move(arcs));
}

ColoredDigraph complete_digraph(int m, bool with_loops)
{
    require(m >= 1, "complete digraph needs m >= 1");
    std::vector<ColoredArc> arcs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (with_loops || i != j)
                arcs.push_back({i, j, ArcColor::None});
    return ColoredDigraph::build(m, std::move(arcs));
}

ColoredDigraph de_bruijn(int d, int k)
{
    require(d >= 1 && k >= 1, "De Bruijn digraph needs d, k >= 1");
    long long size = 1;
    for (int i = 0; i < k; ++i) {
        size *= d;
        require(size <= (1 << 24), "De Bruijn digraph too large");
    }
    const int n = static_cast<int>(size);
    const int top = n / d;
    std::vector<ColoredArc> arcs;
    for (int v = 0; v < n; ++v) {
        const int first = v / top;
        for (int y = 0; y < d; ++y) {
            ArcColor c = ArcColor::None;
            if (d == 2)
                c = first == y ? ArcColor::Blue : ArcColor::Red;
            arcs.push_back({v, (v % top) * d + y, c});
        }
    }
    return ColoredDigraph::build(n, std::move(arcs));
}

ColoredDigraph kautz(int d, int k)
{
    require(d >= 1 && k >= 1, "Kautz digraph needs d, k >= 1");
    // Words over Z_{d+1} with distinct consecutive letters.
    std::vector<std::vector<int>> words;
    for (int x = 0; x <= d; ++x)
        words.push_back({x});
    for (int len = 1; len < k; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words)
            for (int x = 0; x <= d; ++x)
                if (x != w.back()) {
                    next.push_back(w);
                    next.back().push_back(x);
                }
        words = std::move(next);
        require(words.size() <= (1u << 24), "Kautz digraph too large");
    }
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(words.size()); ++i)
        index[words[i]] = i;
    std::vector<ColoredArc> arcs;
    for (int i = 0; i < static_cast<int>(words.size()); ++i) {
        const auto& w = words[i];
        for (int y = 0; y <= d; ++y) {
            if (y == w.back())
                continue;
            std::vector<int> t(w.begin() + 1, w.end());
            t.push_back(y);
            ArcColor c = ArcColor::None;
            if (d == 2) {
                const int out_step = mod(y - w.back(), 3);
                const int in_step = k >= 2 ? mod(w[1] - w[0], 3) : 1;
                c = out_step == in_step ? ArcColor::Blue : ArcColor::Red;
            }
            arcs.push_back({i, index.at(t), c});
        }
    }
    return ColoredDigraph::build(static_cast<int>(words.size()), std::move(arcs));
}

} // namespace mixedmoore::families
