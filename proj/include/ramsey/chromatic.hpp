#pragma once

#include <cstdint>

#include "ramsey/graph.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

struct ChromaticResult {
  SearchStatus status = SearchStatus::Found;  // Found = exact value computed
  int value = 0;
  std::uint64_t nodes = 0;
};

// Exact chromatic number for graphs on at most 20 vertices: greedy clique and
// DSATUR bounds, then k-colorability by backtracking for each k between them.
ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = 50'000'000);

}  // namespace ramsey
