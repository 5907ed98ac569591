#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mixedmoore {

using BigInt = boost::multiprecision::cpp_int;

namespace bounds {

// Moore bound M(r, z, k), exact, via the layer recurrence
//   e_{i+1} = (r-1) e_i + r d_i,   d_{i+1} = z (e_i + d_i),   e_1 = r, d_1 = z.
BigInt moore_mixed(int r, int z, int k);

// The irrational closed form of the same bound in double precision. Only
// meaningful when (z+r)^2 + 2(z-r) + 1 > 0; returns NaN otherwise.
double moore_mixed_closed_form(int r, int z, int k);

// M(1,1,k) from M(k) = M(k-1) + M(k-2) + 2, M(0) = 1, M(1) = 3.
BigInt moore_11(int k);
double moore_11_closed_form(int k);

// Lower bound on the defect of a (1,1)-regular mixed graph of diameter k.
BigInt defect_lower(int k);

// Upper bound on the order of a (1,1)-regular mixed graph of diameter k >= 2.
BigInt upper_bound(int k);

// Best known constructive order for diameter k >= 2.
BigInt lower_bound(int k);
std::string lower_bound_source(int k);

// Fibonacci numbers with f_0 = f_1 = 1.
BigInt fibonacci(int k);

struct LevelCounts {
    BigInt a; // words of length l without "00"
    BigInt b; // ... entered by an edge (ending in 0)
    BigInt c; // ... entered by an arc
};

LevelCounts level_counts(int level);

BigInt derangements(int n);
// Perfect matchings of m labelled vertices: (m-1)!! for even m, else 0.
BigInt perfect_matchings(int m);

// D_{a(k)} (b(k) pm(c(k)+1) + c(k) pm(c(k)-1)).
BigInt search_space_bound(int k);

struct BoundReport {
    int k = 0;
    int r = 1;
    int z = 1;
    BigInt moore;
    BigInt defect_lower; // (1,1) only
    BigInt upper;        // (1,1) only
    BigInt lower;        // (1,1) only
    std::string lower_source;
};

BoundReport report(int k, int r = 1, int z = 1);

} // namespace bounds
} // namespace mixedmoore
