#include "generators.hpp"
#include "mixedmoore/codec.hpp"
#include "mixedmoore/reference.hpp"
#include "mixedmoore/spectra.hpp"

#include <doctest.h>

using namespace mixedmoore;
using spectra::IntPolynomial;

TEST_CASE("polynomial arithmetic")
{
    const auto p = IntPolynomial::from_descending({1, 0, -1, 1});
    CHECK(p.degree() == 3);
    CHECK(p.eval(2) == 7);
    CHECK(p.to_string().size() > 0);
    const auto q = IntPolynomial::linear(1) * IntPolynomial::linear(-1);
    CHECK(q == IntPolynomial::from_descending({1, 0, -1}));
    const auto [quot, rem] = (p * q + IntPolynomial::linear(3)).divmod(q);
    CHECK(quot == p);
    CHECK(rem == IntPolynomial::linear(3));
    CHECK(IntPolynomial::linear(2).pow(3) == IntPolynomial::from_descending({1, -6, 12, -8}));
}

TEST_CASE("characteristic polynomials of small graphs")
{
    // Directed 3-cycle: x^3 - 1.
    const auto c3 = MixedGraph::build(3, {}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(spectra::char_poly(c3) == IntPolynomial::from_descending({1, 0, 0, -1}));
    // Single edge: x^2 - 1.
    CHECK(spectra::char_poly(MixedGraph::build(2, {{0, 1}}, {})) == IntPolynomial::from_descending({1, 0, -1}));
}

TEST_CASE("property: trace method agrees with interpolation")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = gen::mixed(rng, 1 + static_cast<int>(rng() % 14), 0.2, 0.3, true);
        REQUIRE(spectra::char_poly(g) == spectra::char_poly_interpolated(g));
    }
}

TEST_CASE("class templates have degree 14 and sizes 9,6,5,4,2,1")
{
    std::vector<int> sizes(6, 0);
    for (auto s : reference::order14_diameter4) {
        const auto c = spectra::classify(codec::decode_digraph6(s));
        REQUIRE(c.has_value());
        ++sizes[*c - 1];
    }
    CHECK(sizes == std::vector<int>{9, 6, 5, 4, 2, 1});
    for (const auto& cls : spectra::spectrum_classes()) {
        CHECK(cls.product().degree() == 14);
        CHECK(cls.expected_members == sizes[cls.id - 1]);
    }
}
