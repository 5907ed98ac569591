#include "generators.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/codec.hpp"
#include "mixedmoore/error.hpp"
#include "mixedmoore/families.hpp"
#include "mixedmoore/reference.hpp"

#include <doctest.h>

using namespace mixedmoore;

TEST_CASE("property: canonical form is invariant under relabeling")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const bool digons = trial % 2 == 1;
        const auto g = gen::mixed(rng, 3 + static_cast<int>(rng() % 12), 0.15, 0.3, digons);
        const auto h = g.relabeled(gen::permutation(rng, g.order()));
        REQUIRE(canonical_form(g) == canonical_form(h));
        REQUIRE(are_isomorphic(g, h));
    }
}

TEST_CASE("canonical labeling relabels onto the form")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = gen::mixed(rng, 10, 0.2, 0.3, false);
        const auto lab = canonical_labeling(g, CanonicalMode::Plain);
        const auto h = g.relabeled(lab.position);
        CHECK(canonical_labeling(h, CanonicalMode::Plain).form == lab.form);
    }
}

TEST_CASE("edge and arc are distinguished")
{
    const auto a = MixedGraph::build(2, {{0, 1}}, {});
    const auto b = MixedGraph::build(2, {}, {{0, 1}, {1, 0}});
    CHECK_FALSE(are_isomorphic(a, b));
    CHECK(default_mode(b) == CanonicalMode::TwoColor);
    CHECK_THROWS_AS(canonical_form(b, CanonicalMode::Plain), Error);
}

TEST_CASE("automorphism counts")
{
    const auto c5 = MixedGraph::build(5, {}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(automorphism_count(c5) == 5);
    const auto p = MixedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, {});
    CHECK(automorphism_count(p) == 10);
    CHECK(automorphism_count(families::build_Fstar(3).graph) == 6);
}

TEST_CASE("listed order-14 graphs are pairwise distinct")
{
    std::set<CanonicalForm> forms;
    for (auto s : reference::order14_diameter4)
        forms.insert(canonical_form(codec::decode_digraph6(s)));
    CHECK(forms.size() == 27);
}
