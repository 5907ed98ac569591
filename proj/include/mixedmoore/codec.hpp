#pragma once

#include "mixedmoore/core.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace mixedmoore::codec {

// digraph6 with the "edge = digon" convention. Accepts an optional
// ">>digraph6<<" header and an optional leading '&'; n <= 62.
MixedGraph decode_digraph6(std::string_view text);

// With emit_amp the standard '&' prefix is written; without it the bare
// style (size byte first) is produced.
std::string encode_digraph6(const MixedGraph& g, bool emit_amp = true);

// Plain-text format:
//   mixed <n>
//   e <u> <v>
//   a <u> <v>
// Blank lines and '#' comments are ignored.
MixedGraph read_text(std::istream& in);
MixedGraph parse_text(std::string_view text);
void write_text(std::ostream& out, const MixedGraph& g);
std::string to_text(const MixedGraph& g);

} // namespace mixedmoore::codec
