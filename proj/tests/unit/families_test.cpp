#include "mixedmoore/canonical.hpp"
#include "mixedmoore/families.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mixedmoore;

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

bool is_automorphism(const MixedGraph& g, const std::vector<int>& p)
{
    return g.relabeled(p) == g;
}

} // namespace

TEST_CASE("F(n) order, diameter and degrees")
{
    for (int n = 2; n <= 6; ++n) {
        const auto f = families::build_F(n);
        CHECK(f.graph.order() == 3 << n);
        CHECK(diameter(f.graph) == std::optional<int>(2 * n));
        int max_in = 0;
        for (int v = 0; v < f.graph.order(); ++v) {
            CHECK(f.graph.out_degree(v) == 1);
            max_in = std::max(max_in, f.graph.in_degree(v));
        }
        CHECK(max_in == 2);
        CHECK(f.labels.size() == static_cast<std::size_t>(f.graph.order()));
        CHECK(are_isomorphic(f.graph, families::build_F_numeric(n).graph));
    }
}

TEST_CASE("F(n) relabeling maps are automorphisms or isomorphisms")
{
    for (int n = 2; n <= 5; ++n) {
        const auto f = families::build_F(n).graph;
        CHECK(is_automorphism(f, families::f_flip_automorphism(n)));
        CHECK(f.relabeled(families::f_to_numeric_map(n)) == families::build_F_numeric(n).graph);
    }
}

TEST_CASE("G(n) and G+(n)")
{
    for (int n = 3; n <= 7; ++n) {
        const auto g = families::build_G(n).graph;
        CHECK(g.order() == (2 << n) - 4);
        CHECK(diameter(g) == std::optional<int>(2 * n - 1));
        const auto gp = families::build_Gplus(n).graph;
        CHECK(gp.order() == 2 << n);
        CHECK(diameter(gp) == std::optional<int>(2 * n));
    }
}

TEST_CASE("property: G+(n) step maps commute with digit flips")
{
    for (int n = 2; n <= 4; ++n) {
        const auto psi0 = families::gplus_edge_step(n);
        const auto psi1 = families::gplus_arc_step(n);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            const auto phi = families::gplus_digit_flip(n, mask);
            CHECK(compose(psi0, phi) == compose(phi, psi0));
            CHECK(compose(psi1, phi) == compose(families::gplus_digit_flip(n, families::gplus_shift_mask(n, mask)), psi1));
        }
    }
}

TEST_CASE("shift mask rotates right")
{
    CHECK(families::gplus_shift_mask(4, 0b0001) == 0b1000);
    CHECK(families::gplus_shift_mask(4, 0b0110) == 0b0011);
    for (unsigned m = 0; m < 32; ++m) {
        unsigned x = m;
        for (int i = 0; i < 5; ++i)
            x = families::gplus_shift_mask(5, x);
        CHECK(x == m);
    }
}

TEST_CASE("de Bruijn and Kautz digraphs")
{
    const auto b = families::de_bruijn(2, 3);
    CHECK(b.order() == 8);
    CHECK(diameter(b.as_mixed()) == std::optional<int>(3));
    const auto k = families::kautz(2, 3);
    CHECK(k.order() == 12);
    CHECK(diameter(k.as_mixed()) == std::optional<int>(3));
    // K(d,k) is the line digraph of K(d,k-1).
    CHECK(are_isomorphic(families::line_digraph(families::kautz(2, 2)).as_mixed(), k.as_mixed()));
    CHECK(are_isomorphic(families::kautz(3, 1).as_mixed(), families::complete_digraph(4, false).as_mixed()));
}

TEST_CASE("H_n(K3) has no digons and contracts to a Kautz digraph")
{
    for (int n = 3; n <= 5; ++n) {
        const auto h = families::build_H(n, families::symmetric_cycle(3)).graph;
        CHECK(h.order() == 3 << (n - 1));
        CHECK(digons_and_loops(h).digons == 0);
        CHECK(are_isomorphic(contract_edges(h).as_mixed(), families::kautz(2, n - 1).as_mixed()));
    }
}

TEST_CASE("F*(n) and its alternative labelling")
{
    for (int n = 3; n <= 4; ++n) {
        const auto a = families::build_Fstar(n).graph;
        const auto b = families::build_Fstar_alt(n).graph;
        CHECK(are_isomorphic(a, b));
        CHECK(is_automorphism(b, families::fstar_alt_phi(n)));
        CHECK(is_automorphism(b, families::fstar_alt_psi(n)));
    }
    const auto phi = families::fstar_alt_phi(3), psi = families::fstar_alt_psi(3);
    std::vector<int> id(phi.size());
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = static_cast<int>(i);
    CHECK(compose(phi, phi) == id);
    CHECK(compose(psi, compose(psi, psi)) == id);
    const auto pp = compose(phi, psi);
    CHECK(compose(pp, pp) == id);
}

TEST_CASE("label lookup")
{
    const auto gp = families::build_Gplus(2);
    CHECK(gp.index_of("0|00") >= 0);
    CHECK(gp.index_of("nope") == -1);
}
