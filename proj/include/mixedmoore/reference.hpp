#pragma once

#include <array>
#include <string_view>

namespace mixedmoore::reference {

// The 27 largest (1,1)-mixed graphs of diameter 4, bare digraph6 (no '&').
// The first is the Cayley graph of D_7.
extern const std::array<std::string_view, 27> order14_diameter4;

struct BoundsRow {
    int k;
    long long moore;
    long long lower;
    long long upper;
};

// Moore bound, best known order and upper bound for k = 2..16.
extern const std::array<BoundsRow, 15> bounds_table;

struct SearchSpaceRow {
    int k;
    long long count;
};

extern const std::array<SearchSpaceRow, 3> search_space_table;

// Adjacency matrix of G+(2) and its fourth power in the printed vertex order.
extern const std::array<std::array<int, 8>, 8> gplus2_adjacency;
extern const std::array<std::array<int, 8>, 8> gplus2_fourth_power;
// Labels of G+(2) in that order.
extern const std::array<std::string_view, 8> gplus2_order;

// Member counts of the six spectrum classes of the order-14 graphs.
extern const std::array<int, 6> spectrum_class_sizes;

// Voltage base of the order-72 diameter-8 lift over the dihedral group of
// order 18, vertices A, B, C, D = 0..3, as drawn.
extern const std::string_view fig7_base;
// The order-544 base shape: arcs 0->1->2->3->0, edges 0-1 and 2-3.
extern const std::string_view fig8_shape;

} // namespace mixedmoore::reference
