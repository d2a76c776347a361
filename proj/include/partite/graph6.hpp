#pragma once

// Bit-exact graph6 codec. Size field: one byte n+63 for n <= 62, else '~'
// followed by three 6-bit chunks. Edge bits run in column order x(0,1),
// x(0,2), x(1,2), x(0,3), ..., zero-padded to a multiple of six.

#include <string>
#include <string_view>

#include "partite/graph.hpp"

namespace partite {

// Supports 1 <= n <= 258047.
std::string graph6_encode(const Graph& g);

// Inverse of encode; tolerates an optional ">>graph6<<" header and
// surrounding whitespace. Malformed bytes report their offset.
Graph graph6_decode(std::string_view text);

}  // namespace partite
