#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

enum class ArrowVerdict { Ramsey, NotRamsey, Unknown };

struct ArrowOptions {
  std::uint64_t node_budget = 1'000'000'000;
  bool orbit_pruning = true;  // takes effect on complete hosts without copy filters
  int prefix_depth = 12;      // split depth for the task phase; engine shape is
                              // fixed by the edge count alone, so results do not
                              // depend on the thread count
  const std::vector<std::uint64_t>* forbidden_red = nullptr;
  const std::vector<std::uint64_t>* forbidden_blue = nullptr;
};

struct ArrowResult {
  ArrowVerdict verdict = ArrowVerdict::Unknown;
  // Set when NotRamsey: the first good coloring in lexicographic order over
  // the canonical edge list with blue before red. 1 = red.
  std::vector<std::uint8_t> good_red;
  std::uint64_t nodes = 0;  // diagnostic only; keep out of machine-readable output
};

// Does every red/blue coloring of host contain a red copy of red_pattern or a
// blue copy of blue_pattern? Copies whose vertex set appears in the matching
// forbidden list are ignored. Both patterns need at least one edge.
ArrowResult search_arrow(const Graph& host, const Graph& red_pattern,
                         const Graph& blue_pattern, const ArrowOptions& opts = {});

enum class MonoColor { red, blue };

struct MonoCopy {
  SearchStatus status = SearchStatus::NotFound;
  MonoColor color = MonoColor::red;  // valid when Found; red is searched first
  Embedding embedding;
  std::uint64_t nodes = 0;
};

// Looks for a monochromatic copy in a finished coloring. NotFound certifies
// the coloring good; used to verify certificates independently of the search.
MonoCopy find_mono_copy(const EdgeColoring& coloring, const Graph& red_pattern,
                        const Graph& blue_pattern,
                        std::uint64_t budget = default_subgraph_budget,
                        const std::vector<std::uint64_t>* forbidden_red = nullptr,
                        const std::vector<std::uint64_t>* forbidden_blue = nullptr);

struct RobustQuery {
  std::vector<std::uint64_t> forbidden_red;   // vertex-set masks
  std::vector<std::uint64_t> forbidden_blue;
};

// Arrow question where the listed vertex sets never count as copies.
// Masks must lie inside the host and have the pattern's cardinality.
ArrowResult robust_arrow(const Graph& host, const Graph& red_pattern,
                         const Graph& blue_pattern, const RobustQuery& query,
                         const ArrowOptions& opts = {});

struct GlobalArrowResult {
  ArrowVerdict verdict = ArrowVerdict::Unknown;
  std::uint64_t witness_subset = 0;     // when NotRamsey: a qualifying subset
  std::vector<std::uint8_t> good_red;   // good coloring of its induced graph
  std::uint64_t nodes = 0;
};

// Does every vertex subset W with |W| >= mu * n arrow (red_pattern,
// blue_pattern) in the induced graph? Only the smallest qualifying size is
// searched: a larger subset inherits the property from any qualifying subset
// it contains, and a failure at the smallest size is already a witness.
GlobalArrowResult global_arrow(const Graph& host, const Graph& red_pattern,
                               const Graph& blue_pattern, const Rational& mu,
                               const ArrowOptions& opts = {});

}  // namespace ramsey
