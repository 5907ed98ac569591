#include "mixedmoore/canonical.hpp"

#include "mixedmoore/error.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace mixedmoore {

namespace {

struct Relation {
    int target;
    int tag; // direction * 4 + colour
};

// Relation view of a mixed graph as seen by the refinement.
struct View {
    CanonicalMode mode;
    const MixedGraph* graph;
    int n;
    std::vector<std::vector<Relation>> rel;
    std::vector<int> loop_flag;
};

View make_view(const MixedGraph& g, CanonicalMode mode)
{
    View v{mode, &g, g.order(), std::vector<std::vector<Relation>>(g.order()), std::vector<int>(g.order(), 0)};
    const int edge_colour = mode == CanonicalMode::Plain ? 0 : 1;
    for (const auto& e : g.edges()) {
        v.rel[e.u].push_back({e.v, 0 * 4 + edge_colour});
        v.rel[e.v].push_back({e.u, 1 * 4 + edge_colour});
        v.rel[e.v].push_back({e.u, 0 * 4 + edge_colour});
        v.rel[e.u].push_back({e.v, 1 * 4 + edge_colour});
    }
    for (const auto& a : g.arcs()) {
        if (a.from == a.to) {
            v.loop_flag[a.from] = 1;
            continue;
        }
        v.rel[a.from].push_back({a.to, 0});
        v.rel[a.to].push_back({a.from, 4});
    }
    return v;
}

using Cells = std::vector<std::vector<int>>;
using Code = std::vector<int>;

// Equitable refinement by repeated signature splitting. Only cell indices
// and relation tags enter a signature, so the result is label-invariant.
void refine(const View& view, Cells& cells)
{
    std::vector<int> cell_of(view.n);
    std::vector<std::vector<long long>> sig(view.n);
    for (;;) {
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (int v : cells[c])
                cell_of[v] = c;
        Cells next;
        next.reserve(cells.size() * 2);
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            for (int v : cell) {
                auto& s = sig[v];
                s.clear();
                for (const auto& r : view.rel[v])
                    s.push_back((static_cast<long long>(r.tag) << 32) | cell_of[r.target]);
                std::sort(s.begin(), s.end());
            }
            std::sort(cell.begin(), cell.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            std::size_t start = 0;
            for (std::size_t i = 1; i <= cell.size(); ++i) {
                if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
                    next.emplace_back(cell.begin() + start, cell.begin() + i);
                    start = i;
                }
            }
        }
        const bool stable = next.size() == cells.size();
        cells = std::move(next);
        if (stable)
            return;
    }
}

Code leaf_code(const View& view, const std::vector<int>& pos)
{
    const MixedGraph& g = *view.graph;
    Code code{view.n};
    if (view.mode == CanonicalMode::Plain) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(2 * g.edges().size() + g.arcs().size());
        for (const auto& e : g.edges()) {
            pairs.emplace_back(pos[e.u], pos[e.v]);
            pairs.emplace_back(pos[e.v], pos[e.u]);
        }
        for (const auto& a : g.arcs())
            pairs.emplace_back(pos[a.from], pos[a.to]);
        std::sort(pairs.begin(), pairs.end());
        code.push_back(static_cast<int>(pairs.size()));
        for (const auto& [a, b] : pairs) {
            code.push_back(a);
            code.push_back(b);
        }
        return code;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        edges.emplace_back(std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v]));
    std::sort(edges.begin(), edges.end());
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : g.arcs())
        arcs.emplace_back(pos[a.from], pos[a.to]);
    std::sort(arcs.begin(), arcs.end());
    code.push_back(static_cast<int>(edges.size()));
    for (const auto& [a, b] : edges) {
        code.push_back(a);
        code.push_back(b);
    }
    code.push_back(static_cast<int>(arcs.size()));
    for (const auto& [a, b] : arcs) {
        code.push_back(a);
        code.push_back(b);
    }
    return code;
}

constexpr std::uint64_t leaf_budget = 4'000'000;

class TreeSearch {
public:
    TreeSearch(const View& view, bool counting, const Code* target)
        : view_(view), counting_(counting), target_(target) {}

    void run()
    {
        Cells cells(2);
        for (int v = 0; v < view_.n; ++v)
            cells[view_.loop_flag[v] ? 1 : 0].push_back(v);
        cells.erase(std::remove_if(cells.begin(), cells.end(), [](const auto& c) { return c.empty(); }), cells.end());
        visit(std::move(cells));
    }

    const Code& best_code() const { return best_code_; }
    const std::vector<int>& best_position() const { return best_pos_; }
    std::uint64_t matches() const { return matches_; }

private:
    void visit(Cells cells)
    {
        refine(view_, cells);
        if (static_cast<int>(cells.size()) == view_.n) {
            leaf(cells);
            return;
        }
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;

        const std::vector<int> members = cells[target];
        std::vector<int> explored;
        for (int v : members) {
            if (!counting_ && in_explored_orbit(v, explored))
                continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : members)
                    if (w != v)
                        rest.push_back(w);
                child.push_back(std::move(rest));
            }
            prefix_.push_back(v);
            visit(std::move(child));
            prefix_.pop_back();
            explored.push_back(v);
        }
    }

    void leaf(const Cells& cells)
    {
        if (++leaves_ > leaf_budget)
            throw Error(ErrorKind::TooLarge, "canonical labeling search exceeded its leaf budget");
        std::vector<int> pos(view_.n);
        for (int c = 0; c < view_.n; ++c)
            pos[cells[c][0]] = c;
        Code code = leaf_code(view_, pos);
        if (counting_) {
            if (code == *target_)
                ++matches_;
            return;
        }
        if (best_pos_.empty() || code < best_code_) {
            best_code_ = std::move(code);
            best_pos_ = std::move(pos);
        } else if (code == best_code_ && automorphisms_.size() < 128) {
            // pos and best_pos_ give the same graph, so best^{-1} o pos is an automorphism.
            std::vector<int> inverse_best(view_.n);
            for (int v = 0; v < view_.n; ++v)
                inverse_best[best_pos_[v]] = v;
            std::vector<int> gamma(view_.n);
            for (int v = 0; v < view_.n; ++v)
                gamma[v] = inverse_best[pos[v]];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    // Orbits of the automorphisms found so far that fix the current prefix.
    bool in_explored_orbit(int v, const std::vector<int>& explored)
    {
        if (explored.empty() || automorphisms_.empty())
            return false;
        std::vector<int> parent(view_.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            for (int x = 0; x < view_.n; ++x)
                parent[find(x)] = find(gamma[x]);
        }
        const int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
    }

    const View& view_;
    bool counting_;
    const Code* target_;
    Code best_code_;
    std::vector<int> best_pos_;
    std::vector<std::vector<int>> automorphisms_;
    std::vector<int> prefix_;
    std::uint64_t matches_ = 0;
    std::uint64_t leaves_ = 0;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t x)
{
    out.push_back(static_cast<std::uint8_t>(x >> 24));
    out.push_back(static_cast<std::uint8_t>(x >> 16));
    out.push_back(static_cast<std::uint8_t>(x >> 8));
    out.push_back(static_cast<std::uint8_t>(x));
}

} // namespace

std::string CanonicalForm::hex() const
{
    std::string s;
    s.reserve(bytes.size() * 2);
    char buf[3];
    for (auto b : bytes) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        s += buf;
    }
    return s;
}

CanonicalMode default_mode(const MixedGraph& g)
{
    return digons_and_loops(g).digons == 0 ? CanonicalMode::Plain : CanonicalMode::TwoColor;
}

CanonicalLabeling canonical_labeling(const MixedGraph& g, CanonicalMode mode)
{
    if (mode == CanonicalMode::Plain && digons_and_loops(g).digons != 0)
        throw Error(ErrorKind::InvalidArgument, "plain canonical form needs a digon-free graph; use TwoColor");
    CanonicalLabeling out;
    out.form.bytes.push_back(static_cast<std::uint8_t>(mode));
    if (g.order() == 0) {
        put_u32(out.form.bytes, 0);
        return out;
    }
    View view = make_view(g, mode);
    TreeSearch search(view, false, nullptr);
    search.run();
    out.position = search.best_position();
    for (int x : search.best_code())
        put_u32(out.form.bytes, static_cast<std::uint32_t>(x));
    return out;
}

CanonicalForm canonical_form(const MixedGraph& g, CanonicalMode mode)
{
    return canonical_labeling(g, mode).form;
}

CanonicalForm canonical_form(const MixedGraph& g)
{
    return canonical_form(g, default_mode(g));
}

bool are_isomorphic(const MixedGraph& a, const MixedGraph& b)
{
    if (a.order() != b.order() || a.edges().size() != b.edges().size() || a.arcs().size() != b.arcs().size())
        return false;
    return canonical_form(a, CanonicalMode::TwoColor) == canonical_form(b, CanonicalMode::TwoColor);
}

std::uint64_t automorphism_count(const MixedGraph& g, int max_order)
{
    if (g.order() > max_order)
        throw Error(ErrorKind::TooLarge, "automorphism count capped at order " + std::to_string(max_order));
    if (g.order() == 0)
        return 1;
    View view = make_view(g, CanonicalMode::TwoColor);
    TreeSearch best(view, false, nullptr);
    best.run();
    Code target = best.best_code();
    TreeSearch count(view, true, &target);
    count.run();
    return count.matches();
}

} // namespace mixedmoore
