#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

// Deliberately naive implementations: no ordering heuristics, no pruning, no
// shared code with the main kernels. Tests and the benchmark link these; the
// library and CLI never do.
namespace ramsey::ref {

// Injective embedding search over all vertex maps in index order.
bool contains_subgraph(const Graph& host, const Graph& pattern);

struct ArrowScan {
  bool arrows = false;
  // When arrows is false: the first good coloring in lexicographic order on
  // the canonical edge list, blue before red. 1 = red.
  std::vector<std::uint8_t> good_red;
};

// Walks all 2^e colorings in lexicographic order (edge 0 varies slowest).
ArrowScan arrow_scan(const Graph& host, const Graph& red_pattern, const Graph& blue_pattern);

// Maximum 2-density over every subgraph, vertex and edge subsets both.
Rational m2_over_subgraphs(const Graph& g);

// Quantifies over genuinely proper subgraphs (any vertex or edge removed).
bool strictly_2_balanced(const Graph& g);

// max e'/(v'-2+1/m2(h2)) over subgraphs of h1 with at least one edge.
Rational asym_over_subgraphs(const Graph& h1, const Graph& h2);

Rational m_over_subgraphs(const Graph& g);

}  // namespace ramsey::ref
