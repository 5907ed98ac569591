#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mixedmoore {

// Unordered pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

struct Arc {
    int from = 0;
    int to = 0;

    auto operator<=>(const Arc&) const = default;
};

// A mixed graph G = (V, E, A) on vertices 0..n-1. Immutable once built.
// Self-loops are allowed as arcs; an unordered pair may not be both an edge
// and a digon.
class MixedGraph {
public:
    MixedGraph() = default;

    static MixedGraph build(int n, std::vector<Edge> edges, std::vector<Arc> arcs);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const int> edge_neighbors(int v) const { return slice(edge_off_, edge_adj_, v); }
    std::span<const int> out_neighbors(int v) const { return slice(out_off_, out_adj_, v); }
    std::span<const int> in_neighbors(int v) const { return slice(in_off_, in_adj_, v); }

    int undirected_degree(int v) const { return static_cast<int>(edge_neighbors(v).size()); }
    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

    bool has_edge(int u, int v) const;
    bool has_arc(int u, int v) const;

    // Image of the graph under vertex map v -> perm[v].
    MixedGraph relabeled(std::span<const int> perm) const;

    bool operator==(const MixedGraph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_ && arcs_ == other.arcs_;
    }

private:
    static std::span<const int> slice(const std::vector<int>& off, const std::vector<int>& adj, int v)
    {
        return {adj.data() + off[v], adj.data() + off[v + 1]};
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Arc> arcs_;
    std::vector<int> edge_off_{0}, edge_adj_;
    std::vector<int> out_off_{0}, out_adj_;
    std::vector<int> in_off_{0}, in_adj_;
};

enum class ArcColor : std::uint8_t { None, Blue, Red };

struct ColoredArc {
    int from = 0;
    int to = 0;
    ArcColor color = ArcColor::None;

    auto operator<=>(const ColoredArc&) const = default;
};

// Digraph whose arcs may carry a blue/red colouring. Parallel arcs are
// permitted when their colours differ.
class ColoredDigraph {
public:
    ColoredDigraph() = default;

    static ColoredDigraph build(int n, std::vector<ColoredArc> arcs);

    int order() const { return n_; }
    const std::vector<ColoredArc>& arcs() const { return arcs_; }
    std::span<const ColoredArc> out_arcs(int v) const
    {
        return {arcs_.data() + off_[v], arcs_.data() + off_[v + 1]};
    }

    // True when every arc is coloured and each colour class is a permutation.
    bool has_one_factorization() const;

    // The head of the unique out-arc of v with the given colour.
    int successor(int v, ArcColor color) const;
    // The tail of the unique in-arc of v with the given colour.
    int predecessor(int v, ArcColor color) const;

    // Arcs only, colours dropped, parallel arcs merged.
    MixedGraph as_mixed() const;

private:
    int n_ = 0;
    std::vector<ColoredArc> arcs_; // sorted by (from, to, color)
    std::vector<int> off_{0};
};

struct DistanceTable {
    static constexpr int unreachable = -1;

    int source = 0;
    std::vector<int> dist;

    // nullopt when some vertex is unreachable from the source.
    std::optional<int> eccentricity() const;
};

bool is_totally_regular(const MixedGraph& g, int r, int z);

// Edges are traversable both ways, arcs forward only, unit length each.
DistanceTable bfs(const MixedGraph& g, int source);

// nullopt stands for an infinite diameter (not strongly connected). With
// jobs > 1 the sources are split across threads; the result is the same.
std::optional<int> diameter(const MixedGraph& g, int jobs = 1);

using BinaryMatrix = std::vector<std::vector<std::uint8_t>>;

// A_0 .. A_k with (A_i)_{uv} = 1 iff dist(u, v) = i.
std::vector<BinaryMatrix> distance_matrices(const MixedGraph& g, int k);

// Plain adjacency matrix: an edge contributes both entries, an arc one.
std::vector<std::vector<long long>> adjacency_matrix(const MixedGraph& g);

struct DigonLoopCount {
    int digons = 0;
    int loops = 0;
};

DigonLoopCount digons_and_loops(const MixedGraph& g);

// One vertex per edge (the edge set must be a perfect matching); arcs are
// carried over and merged. Vertex i of the result is edges()[i].
ColoredDigraph contract_edges(const MixedGraph& g);

// Reads a plain digraph as a mixed graph, turning every digon into an edge.
MixedGraph digons_to_edges(const MixedGraph& digraph);

bool is_strongly_connected(const MixedGraph& g);
int connected_components(const MixedGraph& g); // weak components

} // namespace mixedmoore
