#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

inline constexpr int default_partition_cap = 12;

struct PartitionSearch {
  // Found: some partition of V(g) into at most k blocks has no block whose
  // induced subgraph contains h; blocks holds the first such partition in
  // canonical order. NotFound: every partition has a block containing h.
  SearchStatus status = SearchStatus::NotFound;
  std::vector<std::uint64_t> blocks;
  std::uint64_t nodes = 0;
};

// Enumerates set partitions into at most k blocks as restricted growth
// strings; a block that already contains h is never extended, so every leaf
// reached is a counterexample. Partitions into "k possibly empty parts" and
// "at most k nonempty blocks" are the same partitions.
PartitionSearch find_partition_avoiding(const Graph& g, const Graph& h, int k,
                                        int cap = default_partition_cap,
                                        std::uint64_t budget = default_subgraph_budget);

}  // namespace ramsey
