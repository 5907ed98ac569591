#include "mixedmoore/bounds.hpp"

#include "mixedmoore/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace mixedmoore::bounds {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::InvalidArgument, what);
}

struct KnownGraph {
    int k;
    int order;
    const char* source;
};

// Largest (1,1)-regular mixed graphs known for small diameters.
constexpr std::array<KnownGraph, 15> known_lower{{
    {2, 6, "Kautz digraph K(2,2)"},
    {3, 10, "line digraph of C5"},
    {4, 14, "Cayley graph of D7 (27 graphs of order 14)"},
    {5, 24, "computer search"},
    {6, 34, "tabulated construction"},
    {7, 54, "Cayley graph on Z9:Z6"},
    {8, 72, "lift over the dihedral group of order 18"},
    {9, 112, "lift over AGL(1,8)"},
    {10, 144, "Cayley graph on SmallGroup(144,182)"},
    {11, 240, "lift over A5 x Z2"},
    {12, 336, "graph on PSL(2,7):Z2"},
    {13, 544, "lift over Z17:Z8"},
    {14, 800, "Cayley graph on SmallGroup(800,1191)"},
    {15, 1024, "lift over SmallGroup(512,1727)"},
    {16, 1600, "lift over SmallGroup(800,1191)"},
}};

} // namespace

BigInt moore_mixed(int r, int z, int k)
{
    require(r >= 0 && z >= 0 && r + z >= 1, "moore_mixed needs r, z >= 0 and r + z >= 1");
    require(k >= 0, "diameter must be non-negative");
    BigInt total = 1;
    BigInt e = r, d = z;
    for (int i = 1; i <= k; ++i) {
        total += e + d;
        BigInt next_e = BigInt(r - 1) * e + BigInt(r) * d;
        BigInt next_d = BigInt(z) * (e + d);
        e = std::move(next_e);
        d = std::move(next_d);
    }
    return total;
}

double moore_mixed_closed_form(int r, int z, int k)
{
    const double v = double(z + r) * (z + r) + 2.0 * (z - r) + 1.0;
    if (v <= 0)
        return std::numeric_limits<double>::quiet_NaN();
    const double sv = std::sqrt(v);
    const double u1 = (z + r - 1 - sv) / 2;
    const double u2 = (z + r - 1 + sv) / 2;
    const double a = (sv - (z + r + 1)) / (2 * sv);
    const double b = (sv + (z + r + 1)) / (2 * sv);
    auto geometric = [k](double u) {
        if (std::abs(u - 1) < 1e-12)
            return double(k + 1);
        return (std::pow(u, k + 1) - 1) / (u - 1);
    };
    return a * geometric(u1) + b * geometric(u2);
}

BigInt moore_11(int k)
{
    require(k >= 0, "diameter must be non-negative");
    if (k == 0)
        return 1;
    BigInt prev = 1, cur = 3;
    for (int i = 2; i <= k; ++i) {
        BigInt next = cur + prev + 2;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double moore_11_closed_form(int k)
{
    const double s5 = std::sqrt(5.0);
    return (1 - 2 / s5) * std::pow((1 - s5) / 2, k + 1) + (1 + 2 / s5) * std::pow((1 + s5) / 2, k + 1) - 2;
}

BigInt defect_lower(int k)
{
    require(k >= 1, "defect bound needs k >= 1");
    static constexpr std::array<int, 6> initial{0, 1, 1, 2, 3, 5};
    if (k <= 6)
        return initial[k - 1];
    BigInt before = initial[4], last = initial[5];
    for (int i = 7; i <= k; ++i) {
        BigInt next = last + before + ((i % 6 == 1 || i % 6 == 2) ? 1 : 0);
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

BigInt upper_bound(int k)
{
    require(k >= 2, "upper bound needs k >= 2");
    switch (k) {
    case 2: return 6;
    case 3: return 10;
    case 4: return 14;
    case 5: return 26;
    default: break;
    }
    BigInt n = moore_11(k) - defect_lower(k);
    if (n % 2 != 0)
        n -= 1;
    return n;
}

BigInt lower_bound(int k)
{
    require(k >= 2, "lower bound needs k >= 2");
    for (const auto& known : known_lower)
        if (known.k == k)
            return known.order;
    // G(n) has diameter at most 2n and order 2^{n+1} - 4.
    const int n = k / 2;
    return (BigInt(1) << (n + 1)) - 4;
}

std::string lower_bound_source(int k)
{
    for (const auto& known : known_lower)
        if (known.k == k)
            return known.source;
    return "G(" + std::to_string(k / 2) + ")";
}

BigInt fibonacci(int k)
{
    require(k >= 0, "fibonacci index must be non-negative");
    BigInt a = 1, b = 1;
    for (int i = 1; i <= k; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

LevelCounts level_counts(int level)
{
    require(level >= 0, "level must be non-negative");
    LevelCounts prev{1, 0, 1};
    if (level == 0)
        return prev;
    LevelCounts cur{2, 1, 1};
    for (int l = 2; l <= level; ++l) {
        LevelCounts next{cur.a + prev.a, cur.b + prev.b, cur.c + prev.c};
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt derangements(int n)
{
    require(n >= 0, "derangements of a negative count");
    if (n == 0)
        return 1;
    BigInt before = 1, last = 0; // D_0, D_1
    for (int i = 2; i <= n; ++i) {
        BigInt next = BigInt(i - 1) * (last + before);
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

BigInt perfect_matchings(int m)
{
    require(m >= 0, "perfect matchings of a negative count");
    if (m % 2 != 0)
        return 0;
    BigInt result = 1;
    for (int i = m - 1; i > 1; i -= 2)
        result *= i;
    return result;
}

BigInt search_space_bound(int k)
{
    require(k >= 2, "search space bound needs k >= 2");
    const LevelCounts lc = level_counts(k);
    const int a = static_cast<int>(lc.a);
    const int c = static_cast<int>(lc.c);
    return derangements(a) * (lc.b * perfect_matchings(c + 1) + lc.c * perfect_matchings(c - 1));
}

BoundReport report(int k, int r, int z)
{
    BoundReport rep;
    rep.k = k;
    rep.r = r;
    rep.z = z;
    rep.moore = moore_mixed(r, z, k);
    if (r == 1 && z == 1 && k >= 2) {
        rep.defect_lower = defect_lower(k);
        rep.upper = upper_bound(k);
        rep.lower = lower_bound(k);
        rep.lower_source = lower_bound_source(k);
    }
    return rep;
}

} // namespace mixedmoore::bounds
