#pragma once

#include "mixedmoore/canonical.hpp"
#include "mixedmoore/core.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mixedmoore::search {

// Binary words of length <= k without "00", in order of length then
// lexicographically; the root is the empty word. Edges w - w0 for words not
// ending in 0, arcs w -> w1.
struct MooreTree {
    int k = 0;
    std::vector<std::string> words;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::vector<int> level_start; // k + 2 entries

    int index_of(std::string_view word) const; // -1 when absent
    MixedGraph graph() const;
};

MooreTree moore_tree(int k);

struct Survivor {
    CanonicalForm form;
    MixedGraph graph; // relabelled into canonical order
};

struct SearchOutcome {
    int order = 0;
    int k = 0;
    std::uint64_t removal_cases = 0;
    std::uint64_t matching_completions = 0; // all perfect matchings of the unmatched vertices
    std::uint64_t examined = 0;             // complete candidates whose diameter was computed
    std::vector<Survivor> survivors;        // sorted by canonical form
    bool budget_exhausted = false;
    double seconds = 0;
};

struct SearchOptions {
    int jobs = 1;
    int shard_depth = 2;
    std::uint64_t budget = 0; // cap on examined candidates; 0 means none
};

// Order M(1,1,k) - 1: every leaf removal, every matching and arc completion.
// k >= 5 is refused unless a budget is set.
SearchOutcome search_almost_moore(int k, const SearchOptions& opts = {});

// The two removal shapes for order 16 and diameter 4, as word lists.
std::vector<std::vector<std::string>> order16_removal_sets();
SearchOutcome search_order16_k4(const SearchOptions& opts = {});

// Matching i ~ i+1 (i even) on 0..13 with arcs (0,2), (1,5), (5,7).
SearchOutcome search_order14_k4(const SearchOptions& opts = {});

// Matching i ~ i+1 (i even) on 0..order-1, the given arcs fixed, all other
// arcs enumerated. Fixed points, 2-cycles and arcs onto matching partners
// are excluded.
SearchOutcome search_generic(int order, int k, const std::vector<Arc>& seeds, const SearchOptions& opts = {});

} // namespace mixedmoore::search
