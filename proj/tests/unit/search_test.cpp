#include "mixedmoore/bounds.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/error.hpp"
#include "mixedmoore/families.hpp"
#include "mixedmoore/search.hpp"

#include <doctest.h>

using namespace mixedmoore;

TEST_CASE("Moore tree sizes")
{
    for (int k = 1; k <= 10; ++k) {
        const auto t = search::moore_tree(k);
        CHECK(BigInt(t.graph().order()) == bounds::moore_11(k));
        CHECK(t.words.size() == static_cast<std::size_t>(t.graph().order()));
    }
}

TEST_CASE("order 6, diameter 2 is unique")
{
    const auto res = search::search_generic(6, 2, {}, {});
    REQUIRE(res.survivors.size() == 1);
    CHECK(are_isomorphic(res.survivors.front().graph, digons_to_edges(families::kautz(2, 2).as_mixed())));
}

TEST_CASE("almost Moore k=3 is stable")
{
    const auto res = search::search_almost_moore(3, {});
    CHECK(res.order == 10);
    CHECK(res.matching_completions == 9);
    CHECK(res.survivors.size() == 3);
    for (const auto& s : res.survivors) {
        CHECK(diameter(s.graph) == std::optional<int>(3));
        CHECK(is_totally_regular(s.graph, 1, 1));
        CHECK(canonical_form(s.graph) == s.form);
    }
}

TEST_CASE("property: results do not depend on jobs or shard depth")
{
    search::SearchOptions base;
    const auto ref = search::search_generic(10, 3, {}, base);
    for (int jobs : {2, 3}) {
        for (int depth : {1, 2, 4}) {
            search::SearchOptions o;
            o.jobs = jobs;
            o.shard_depth = depth;
            const auto r = search::search_generic(10, 3, {}, o);
            REQUIRE(r.survivors.size() == ref.survivors.size());
            for (std::size_t i = 0; i < r.survivors.size(); ++i)
                CHECK(r.survivors[i].form == ref.survivors[i].form);
        }
    }
}

TEST_CASE("budget is reported, not thrown")
{
    search::SearchOptions o;
    o.budget = 5;
    const auto r = search::search_generic(10, 3, {}, o);
    CHECK(r.budget_exhausted);
}

TEST_CASE("search argument checks")
{
    CHECK_THROWS_AS(search::search_almost_moore(1, {}), Error);
    CHECK_THROWS_AS(search::search_almost_moore(5, {}), Error);
    CHECK_THROWS_AS(search::search_generic(7, 3, {}, {}), Error);
    CHECK_THROWS_AS(search::search_generic(10, 3, {{0, 1}}, {}), Error);
    CHECK(search::order16_removal_sets().size() == 73);
}
