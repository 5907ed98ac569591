#pragma once

#include "mixedmoore/core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace gen {

// Random mixed graph on n vertices: each unordered pair becomes an edge with
// probability pe, otherwise each direction an arc with probability pa. Never
// produces an edge on a digon pair; digons appear only when allow_digons.
inline mixedmoore::MixedGraph mixed(std::mt19937_64& rng, int n, double pe, double pa, bool allow_digons)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<mixedmoore::Edge> edges;
    std::vector<mixedmoore::Arc> arcs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (u(rng) < pe) {
                edges.emplace_back(a, b);
                continue;
            }
            const bool ab = u(rng) < pa;
            bool ba = u(rng) < pa;
            if (ab && ba && !allow_digons)
                ba = false;
            if (ab)
                arcs.push_back({a, b});
            if (ba)
                arcs.push_back({b, a});
        }
    return mixedmoore::MixedGraph::build(n, std::move(edges), std::move(arcs));
}

inline std::vector<int> permutation(std::mt19937_64& rng, int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace gen
