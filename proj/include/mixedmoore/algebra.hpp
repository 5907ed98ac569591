#pragma once

#include "mixedmoore/canonical.hpp"
#include "mixedmoore/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mixedmoore::algebra {

constexpr int max_group_order = 4096;

// A finite group given by its multiplication table. Groups of maps compose
// right to left, (a*b)(x) = a(b(x)); Cayley graphs and lifts multiply on the
// right, g -> g s and g -> g alpha.
class FiniteGroup {
public:
    FiniteGroup() = default;

    // Finds the identity and inverses and verifies the axioms
    // (associativity exhaustively up to order 200, sampled above).
    static FiniteGroup from_table(std::string name, int order, std::vector<std::uint16_t> table,
        std::vector<std::string> element_names);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int power(int a, long long e) const;
    int element_order(int a) const;
    bool is_involution(int a) const { return a != identity_ && mul(a, a) == identity_; }
    std::vector<int> involutions() const;

    const std::string& name() const { return name_; }
    const std::string& element_name(int a) const { return names_[a]; }
    // Accepts an element name (whitespace ignored); throws InvalidArgument.
    int element(std::string_view literal) const;

private:
    std::string name_;
    int n_ = 0;
    int identity_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
};

// Z_n, elements "0".."n-1".
FiniteGroup cyclic(int n);
// Symmetries of the regular m-gon, m = order / 2, vertices 0..m-1 labelled
// clockwise. Rot(k) turns counter-clockwise by 2 pi k / m (i -> i - k);
// Ref(k) fixes vertex k (i -> 2k - i). For even m the reflections through
// edge midpoints are RefE(k): i -> 2k + 1 - i, and Ref(k) runs over k < m/2.
FiniteGroup dihedral(int order);
// Z_m : Z_k with (x1,y1)(x2,y2) = (x1 + t^y1 x2, y1 + y2); elements "(x,y)".
FiniteGroup semidirect_cyclic(int m, int k, int t);
// Elements "(g,h)".
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// Even permutations of 1..5 in cycle notation, e.g. "(1,2,3)(4,5)" and "()".
FiniteGroup alternating5();
// x -> a x + b over GF(8) = GF(2)[x]/(x^3+x+1); elements "[a,b]" with a, b
// the 3-bit field elements as integers.
FiniteGroup agl1_8();
// 2x2 matrices over GF(q) modulo scalars, first nonzero entry of the top row
// scaled to 1; elements "[a,b;c,d]". q prime and the order at most 4096.
FiniteGroup pgl2(int q);
FiniteGroup psl2(int q);

// cyclic:n, dihedral:<order>, semidirect:m:k:t, product:<spec>,<spec>, a5,
// agl1_8, pgl2:q, psl2:q. A spec may be wrapped in parentheses for nesting.
FiniteGroup parse_group(std::string_view spec);

// Edges {w, w s} for s in s1, arcs (w, w s) for s in s2.
MixedGraph cayley_mixed(const FiniteGroup& g, const std::vector<int>& s1, const std::vector<int>& s2);

enum class CarrierKind { Edge, Arc, UndirectedLoop, DirectedLoop };

struct Carrier {
    CarrierKind kind = CarrierKind::Arc;
    int u = 0;
    int v = 0; // equals u for loops
    int voltage = 0;
};

struct VoltageBaseGraph {
    int order = 0;
    std::vector<Carrier> carriers;
};

// Text format:
//   base <n>
//   e <u> <v> <elt>     a <u> <v> <elt>
//   uloop <u> <elt>     dloop <u> <elt>
// '#' starts a comment; a missing <elt> stands for the identity.
VoltageBaseGraph parse_voltage_base(std::string_view text, const FiniteGroup& g);
std::string format_voltage_base(const VoltageBaseGraph& vb, const FiniteGroup& g);

// Vertex (u, g) has index u * |G| + g.
MixedGraph lift(const VoltageBaseGraph& vb, const FiniteGroup& g);

struct CayleyHit {
    int involution = 0;
    int generator = 0;
    int diameter = 0;
    CanonicalForm form;
};

// All (involution, non-involution) pairs whose Cayley graph has diameter at
// most target_k, one per isomorphism class, sorted by (diameter, form).
std::vector<CayleyHit> cayley_search(const FiniteGroup& g, int target_k, int jobs = 1);

struct VoltageAssignment {
    std::vector<int> voltages; // one per carrier of the shape
    bool regular = false;
    std::optional<int> diameter;
};

struct VoltageSearchResult {
    std::vector<VoltageAssignment> best; // regular first, then by diameter
    std::vector<int> free_carriers;      // the rest are gauge-fixed to the identity
    std::uint64_t space_size = 0;        // saturates at UINT64_MAX
    std::uint64_t examined = 0;
    std::uint64_t hits = 0; // examined lifts of diameter <= target_k
    bool exhaustive = false;
    bool budget_exhausted = false;
};

struct VoltageSearchOptions {
    int target_k = 0; // 0 disables hit counting
    std::uint64_t budget = 100000;
    std::optional<std::uint64_t> seed; // required when sampling
    int keep = 10;
    int jobs = 1;
};

// Voltages of a spanning forest of edges/arcs are fixed to the identity;
// the remaining carriers are enumerated when the space fits the budget and
// sampled otherwise. Loops of kind UndirectedLoop range over involutions.
VoltageSearchResult voltage_search(const VoltageBaseGraph& shape, const FiniteGroup& g, const VoltageSearchOptions& opts);

} // namespace mixedmoore::algebra
