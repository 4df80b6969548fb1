#pragma once

#include <string>
#include <string_view>

#include "mostar/graph.hpp"

namespace mostar::graph6 {

// graph6: order byte chr(63+n) (n <= 62; '~' plus three 6-bit bytes for
// 63..64), then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
// packed six bits per byte, most significant first, zero padded, each byte
// offset by 63.

std::string encode(const Graph& g);

/// Throws Error(kParse) on malformed input. Trailing '\r' / '\n' are ignored.
Graph decode(std::string_view text);

}  // namespace mostar::graph6
