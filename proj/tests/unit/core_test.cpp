#include "generators.hpp"
#include "mixedmoore/core.hpp"
#include "mixedmoore/error.hpp"

#include <doctest.h>

#include <functional>

using namespace mixedmoore;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

// Floyd-Warshall over the plain adjacency matrix.
std::vector<std::vector<int>> all_pairs(const MixedGraph& g)
{
    const int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    const auto a = adjacency_matrix(g);
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (a[i][j] && i != j)
                d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

} // namespace

TEST_CASE("build rejects malformed input")
{
    CHECK(kind_of([] { MixedGraph::build(3, {{0, 0}}, {}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { MixedGraph::build(3, {{0, 1}, {1, 0}}, {}); }) == ErrorKind::DuplicateElement);
    CHECK(kind_of([] { MixedGraph::build(3, {}, {{0, 1}, {0, 1}}); }) == ErrorKind::DuplicateElement);
    CHECK(kind_of([] { MixedGraph::build(3, {{0, 1}}, {{0, 1}, {1, 0}}); }) == ErrorKind::EdgeDigonClash);
    CHECK(kind_of([] { MixedGraph::build(2, {{0, 5}}, {}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("directed triangle with a chord edge")
{
    const auto g = MixedGraph::build(3, {{0, 1}}, {{1, 2}, {2, 0}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_arc(1, 2));
    CHECK_FALSE(g.has_arc(2, 1));
    CHECK(diameter(g) == std::optional<int>(2));
    const auto t = bfs(g, 0);
    CHECK(t.dist == std::vector<int>{0, 1, 2});
}

TEST_CASE("diameter is infinite when not strongly connected")
{
    const auto g = MixedGraph::build(3, {}, {{0, 1}, {1, 2}});
    CHECK_FALSE(diameter(g).has_value());
    CHECK_FALSE(is_strongly_connected(g));
    CHECK(connected_components(g) == 1);
}

TEST_CASE("total regularity")
{
    const auto c3 = MixedGraph::build(3, {}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_totally_regular(c3, 0, 1));
    CHECK_FALSE(is_totally_regular(c3, 1, 1));
}

TEST_CASE("property: BFS agrees with Floyd-Warshall")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const auto g = gen::mixed(rng, n, 0.2, 0.25, true);
        const auto ref = all_pairs(g);
        std::optional<int> diam = 0;
        for (int u = 0; u < n; ++u) {
            const auto t = bfs(g, u);
            for (int v = 0; v < n; ++v) {
                const int expect = ref[u][v] >= (1 << 20) ? DistanceTable::unreachable : ref[u][v];
                REQUIRE(t.dist[v] == expect);
                if (expect < 0)
                    diam.reset();
                else if (diam)
                    diam = std::max(*diam, expect);
            }
        }
        CHECK(diameter(g) == diam);
        CHECK(diameter(g, 3) == diam);
    }
}

TEST_CASE("property: distance matrices partition J")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = gen::mixed(rng, 8, 0.3, 0.4, true);
        const auto d = diameter(g);
        if (!d)
            continue;
        const auto mats = distance_matrices(g, *d);
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) {
                int sum = 0;
                for (const auto& m : mats)
                    sum += m[u][v];
                REQUIRE(sum == 1);
            }
    }
}

TEST_CASE("property: relabeling preserves diameter and degrees")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = gen::mixed(rng, 9, 0.2, 0.3, true);
        const auto p = gen::permutation(rng, 9);
        const auto h = g.relabeled(p);
        CHECK(diameter(h) == diameter(g));
        for (int v = 0; v < 9; ++v) {
            CHECK(h.out_degree(p[v]) == g.out_degree(v));
            CHECK(h.undirected_degree(p[v]) == g.undirected_degree(v));
        }
    }
}

TEST_CASE("digons and edge contraction")
{
    const auto digraph = MixedGraph::build(3, {}, {{0, 1}, {1, 0}, {1, 2}, {2, 2}});
    const auto dl = digons_and_loops(digraph);
    CHECK(dl.digons == 1);
    CHECK(dl.loops == 1);
    const auto mixed = digons_to_edges(digraph);
    CHECK(mixed.edges().size() == 1);
    CHECK(mixed.arcs().size() == 2);
    // Matching 0-1, 2-3 with arcs 1->2, 3->0: contraction is a 2-cycle.
    const auto g = MixedGraph::build(4, {{0, 1}, {2, 3}}, {{1, 2}, {3, 0}});
    const auto c = contract_edges(g);
    CHECK(c.order() == 2);
    CHECK(c.arcs().size() == 2);
}
