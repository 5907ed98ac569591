#include "mixedmoore/bounds.hpp"
#include "mixedmoore/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace mixedmoore;

TEST_CASE("Moore bound by level sums")
{
    // An edge-entered vertex sends one arc further; an arc-entered one sends
    // an edge and an arc.
    BigInt total = 3, by_edge = 1, by_arc = 1;
    CHECK(bounds::moore_11(1) == total);
    for (int k = 2; k <= 20; ++k) {
        const BigInt next_edge = by_arc;
        const BigInt next_arc = by_edge + by_arc;
        by_edge = next_edge;
        by_arc = next_arc;
        total += by_edge + by_arc;
        CHECK(bounds::moore_11(k) == total);
        CHECK(bounds::moore_mixed(1, 1, k) == total);
    }
}

TEST_CASE("closed form tracks the recurrence")
{
    for (int k = 1; k <= 30; ++k)
        CHECK(std::llround(bounds::moore_11_closed_form(k)) == bounds::moore_11(k).convert_to<long long>());
    CHECK(bounds::moore_mixed(3, 1, 2) == 18);
}

TEST_CASE("listed bounds")
{
    for (const auto& row : reference::bounds_table) {
        CHECK(bounds::moore_11(row.k) == row.moore);
        CHECK(bounds::upper_bound(row.k) == row.upper);
        CHECK(bounds::lower_bound(row.k) == row.lower);
        CHECK(bounds::lower_bound(row.k) <= bounds::upper_bound(row.k));
        // K(2,2) attains the bound at k = 2.
        if (row.k > 2)
            CHECK(bounds::upper_bound(row.k) < bounds::moore_11(row.k));
    }
}

TEST_CASE("property: upper bounds are even")
{
    for (int k = 6; k <= 40; ++k)
        CHECK(bounds::upper_bound(k) % 2 == 0);
}

TEST_CASE("combinatorial helpers")
{
    const long long d[] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833};
    for (int n = 0; n <= 8; ++n)
        CHECK(bounds::derangements(n) == d[n]);
    CHECK(bounds::perfect_matchings(0) == 1);
    CHECK(bounds::perfect_matchings(8) == 105);
    CHECK(bounds::perfect_matchings(5) == 0);
    for (int k = 1; k <= 20; ++k)
        CHECK(bounds::fibonacci(k + 2) == bounds::fibonacci(k + 1) + bounds::fibonacci(k));
    CHECK(bounds::search_space_bound(3) == 396);
    CHECK(bounds::search_space_bound(4) == 889980);
    CHECK(bounds::search_space_bound(5) == 0);
}

TEST_CASE("level counts add up")
{
    for (int l = 1; l <= 15; ++l) {
        const auto c = bounds::level_counts(l);
        CHECK(c.a == c.b + c.c);
    }
}
