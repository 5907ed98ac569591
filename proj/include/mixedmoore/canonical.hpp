#pragma once

#include "mixedmoore/core.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mixedmoore {

// Plain: every edge is read as a digon of a plain digraph (faithful only
// when the graph has no true digons). TwoColor: edges and arcs are distinct
// relation colours, valid for any mixed graph.
enum class CanonicalMode : std::uint8_t { Plain = 1, TwoColor = 2 };

struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm&) const = default;

    std::string hex() const;
};

struct CanonicalLabeling {
    std::vector<int> position; // vertex -> canonical index
    CanonicalForm form;
};

// Plain when the graph is digon-free, TwoColor otherwise.
CanonicalMode default_mode(const MixedGraph& g);

CanonicalLabeling canonical_labeling(const MixedGraph& g, CanonicalMode mode);
CanonicalForm canonical_form(const MixedGraph& g, CanonicalMode mode);
CanonicalForm canonical_form(const MixedGraph& g);

bool are_isomorphic(const MixedGraph& a, const MixedGraph& b);

// Order of the group of edge- and arc-preserving automorphisms.
std::uint64_t automorphism_count(const MixedGraph& g, int max_order = 256);

} // namespace mixedmoore
