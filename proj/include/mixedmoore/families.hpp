#pragma once

#include "mixedmoore/core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mixedmoore::families {

struct LabeledMixedGraph {
    MixedGraph graph;
    std::vector<std::string> labels;

    // -1 when absent.
    int index_of(std::string_view label) const;
};

// Moore tree of radius n completed by a matching on the arc-entered leaves
// and arcs back to the root (one extra vertex when f_n is odd).
LabeledMixedGraph build_E(int n);

// Labels a|x_1...x_n with a in {+1,-1}, x_i in Z_3, x_{i+1} != x_i.
LabeledMixedGraph build_F(int n);
// Labels alpha|i with alpha in {1,2}, i in Z_{3*2^{n-1}}.
LabeledMixedGraph build_F_numeric(int n);
// a|x -> -a|xbar with 0 <-> 1, 2 fixed; as a permutation of build_F(n) indices.
std::vector<int> f_flip_automorphism(int n);
// psi: F(n) -> F[n]; entry v is the index in build_F_numeric(n) of the image
// of vertex v of build_F(n).
std::vector<int> f_to_numeric_map(int n);

LabeledMixedGraph build_Fstar(int n);
// Labels a|b:a_1...a_{n-1}.
LabeledMixedGraph build_Fstar_alt(int n);
// Phi and Psi of the alternative labelling, as permutations of its indices.
std::vector<int> fstar_alt_phi(int n);
std::vector<int> fstar_alt_psi(int n);

LabeledMixedGraph build_Fprime(int n);

// Labels x_0|x_1...x_n over Z_2.
LabeledMixedGraph build_Gplus(int n);
LabeledMixedGraph build_G(int n);
// The edge step Psi_0 and arc step Psi_1 of G+(n) as index maps.
std::vector<int> gplus_edge_step(int n);
std::vector<int> gplus_arc_step(int n);
// Phi: flips digit x_i for every set bit i-1 of mask (x_0 untouched).
std::vector<int> gplus_digit_flip(int n, unsigned mask);
// The mask m' with Psi_1 o Phi_m = Phi_m' o Psi_1: the flip of x_{i+1} moves
// to x_i and the flip of x_1 to x_n.
unsigned gplus_shift_mask(int n, unsigned mask);

// Walks x_1...x_n of a 2-regular base with a blue/red 1-factorization.
LabeledMixedGraph build_H(int n, const ColoredDigraph& base);

// Symmetric cycle on Z_m: blue i -> i+1, red i -> i-1. m = 3 gives K_3.
ColoredDigraph symmetric_cycle(int m);

// Arc (e1 -> e2) is blue when e1 and e2 have the same colour, red otherwise,
// uncoloured when the input is.
ColoredDigraph line_digraph(const ColoredDigraph& d);
ColoredDigraph complete_digraph(int m, bool with_loops);
// Word constructions; both are coloured when d = 2.
ColoredDigraph de_bruijn(int d, int k);
ColoredDigraph kautz(int d, int k);

} // namespace mixedmoore::families
