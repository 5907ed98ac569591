#include "generators.hpp"
#include "mixedmoore/codec.hpp"
#include "mixedmoore/error.hpp"
#include "mixedmoore/families.hpp"
#include "mixedmoore/reference.hpp"

#include <doctest.h>

using namespace mixedmoore;

TEST_CASE("single edge packs into one byte")
{
    const auto g = MixedGraph::build(2, {{0, 1}}, {});
    // n=2 -> 'A'; bits (0,1),(1,0) of 0110 padded to 011000 = 24 -> 'W'.
    CHECK(codec::encode_digraph6(g, false) == "AW");
    CHECK(codec::encode_digraph6(g) == "&AW");
    CHECK(codec::decode_digraph6("&AW") == g);
    CHECK(codec::decode_digraph6(">>digraph6<<&AW") == g);
}

TEST_CASE("decoder errors")
{
    CHECK_THROWS_AS(codec::decode_digraph6("&AWW"), Error);
    CHECK_THROWS_AS(codec::decode_digraph6("&A\x01"), Error);
    CHECK_THROWS_AS(codec::decode_digraph6(""), Error);
}

TEST_CASE("edges next to true digons cannot be encoded")
{
    const auto gp = families::build_Gplus(2).graph;
    try {
        codec::encode_digraph6(gp);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HasEdgeDigonAmbiguity);
    }
}

TEST_CASE("the 27 listed strings round-trip in bare style")
{
    for (auto s : reference::order14_diameter4)
        CHECK(codec::encode_digraph6(codec::decode_digraph6(s), false) == s);
}

TEST_CASE("property: digraph6 round trip on digon-free graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const auto g = gen::mixed(rng, n, 0.1, 0.15, false);
        REQUIRE(codec::decode_digraph6(codec::encode_digraph6(g)) == g);
        REQUIRE(codec::decode_digraph6(codec::encode_digraph6(g, false)) == g);
    }
}

TEST_CASE("property: text round trip with digons")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = gen::mixed(rng, 1 + static_cast<int>(rng() % 30), 0.1, 0.2, true);
        REQUIRE(codec::parse_text(codec::to_text(g)) == g);
    }
}

TEST_CASE("text parser reports bad lines")
{
    CHECK_THROWS_AS(codec::parse_text("mixed 2\nq 0 1\n"), Error);
    CHECK_THROWS_AS(codec::parse_text("e 0 1\n"), Error);
    CHECK(codec::parse_text("# c\nmixed 2\n\ne 0 1\n").edges().size() == 1);
}
