#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr std::uint64_t default_subgraph_budget = 100'000'000;

enum class SearchStatus { Found, NotFound, Unknown };

// map[p] = host vertex carrying pattern vertex p.
struct Embedding {
  std::vector<int> map;

  std::uint64_t vertex_set() const {
    std::uint64_t m = 0;
    for (const int v : map) m |= std::uint64_t{1} << v;
    return m;
  }
};

struct SubgraphResult {
  SearchStatus status = SearchStatus::NotFound;
  Embedding embedding;      // meaningful only when status == Found
  std::uint64_t nodes = 0;  // assignment attempts spent
};

// Backtracking embedding search: pattern vertices are ordered greedily
// (most already-placed neighbours first, then degree), candidates are pruned
// through adjacency bitmasks and a host-degree filter. Deterministic: the
// embedding returned is the first one in this fixed exploration order.
//
// `forbidden` optionally names vertex sets (as masks) that do not count as
// occurrences; the search then looks for an embedding whose image avoids the
// list. Exceeding the node budget yields Unknown, never a silent NotFound.
SubgraphResult find_subgraph(const Graph& host, const Graph& pattern,
                             std::uint64_t node_budget = default_subgraph_budget,
                             const std::vector<std::uint64_t>* forbidden = nullptr);

// Same search restricted to embeddings that map some pattern edge onto the
// host edge {u, v}. This is the incremental test used after coloring a single
// edge: any monochromatic copy completed by that edge must use it.
SubgraphResult find_subgraph_using_edge(const Graph& host, const Graph& pattern, int u, int v,
                                        std::uint64_t node_budget = default_subgraph_budget,
                                        const std::vector<std::uint64_t>* forbidden = nullptr);

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& emb);

}  // namespace ramsey
