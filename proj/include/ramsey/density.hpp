#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// All maximisations run over induced subgraphs only. That loses nothing:
// each functional here is strictly increasing in the edge count at a fixed
// vertex set, so a non-induced subgraph can attain the maximum only if it is
// the induced graph on its own vertex set. The same argument makes the strict
// flag computable from vertex subsets alone.

inline constexpr int default_enumeration_cap = 16;

enum class ExecMode { serial, parallel };

struct EnumerationCapError : std::runtime_error {
  EnumerationCapError(int n, int cap)
      : std::runtime_error("subset enumeration refused: " + std::to_string(n) +
                           " vertices exceeds the cap of " + std::to_string(cap)) {}
};

struct DensityOrderError : std::invalid_argument {
  DensityOrderError()
      : std::invalid_argument(
            "asym_density expects m2(h1) >= m2(h2); swap the arguments") {}
};

struct DensityReport {
  Rational value;
  std::uint64_t witness = 0;  // maximizing vertex subset as a mask
  bool strict = false;        // no proper subgraph attains the value
};

// 2-density of the graph itself: 0 with no edges, 1/2 for a single edge,
// (e-1)/(v-2) otherwise.
Rational two_density(const Graph& g);

// Edge count over vertex count; rejects the empty vertex set.
Rational ev_density(const Graph& g);

// Maximum 2-density over subgraphs. Witness ties break to the smallest
// cardinality, then the lexicographically smallest vertex set.
DensityReport m2(const Graph& g, int cap = default_enumeration_cap, ExecMode mode = ExecMode::parallel);

// max{ e(S) / (|S| - 2 + 1/m2(h2)) : S subseteq V(h1), e(S) >= 1 }.
// Requires m2(h1) >= m2(h2) and an edge on each side.
DensityReport asym_density(const Graph& h1, const Graph& h2, int cap = default_enumeration_cap,
                           ExecMode mode = ExecMode::parallel);

// Maximum e(S)/|S| over nonempty subsets.
DensityReport m_density(const Graph& g, int cap = default_enumeration_cap,
                        ExecMode mode = ExecMode::parallel);

bool is_strictly_2_balanced(const Graph& g, int cap = default_enumeration_cap);
bool is_strictly_balanced_wrt(const Graph& h1, const Graph& h2, int cap = default_enumeration_cap);

// balanced <=> e/v equals m_density, ties included.
bool is_balanced(const Graph& g, int cap = default_enumeration_cap);

std::vector<int> witness_vertices(std::uint64_t mask);

}  // namespace ramsey
