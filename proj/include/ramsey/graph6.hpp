#pragma once

#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

// graph6 codec. Bit layout: for each column v = 1..n-1 the bits x(0,v)..x(v-1,v)
// are emitted in order, packed into 6-bit groups (high bit first), zero padded,
// each group offset by 63 into printable ASCII. Vertex counts up to 62 use the
// single-byte header; 63 and 64 use the '~' three-byte form.
struct Graph6Error : std::runtime_error {
  std::size_t offset;
  Graph6Error(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

}  // namespace ramsey
