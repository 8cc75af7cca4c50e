#include "ramsey/partitions.hpp"

#include <stdexcept>

namespace ramsey {
namespace {

struct Scan {
  const Graph& g;
  const Graph& h;
  int k;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool starved = false;
  std::vector<std::uint64_t> blocks;
  std::vector<std::int8_t> memo;  // per-mask: -1 unseen, 0 h-free, 1 contains h

  Scan(const Graph& g_, const Graph& h_, int k_, std::uint64_t b)
      : g(g_), h(h_), k(k_), n(g_.vertex_count()), budget(b),
        memo(std::size_t{1} << n, -1) {}

  bool contains(std::uint64_t mask) {
    std::int8_t& m = memo[mask];
    if (m < 0) {
      const SubgraphResult r = find_subgraph(g.induced(mask), h, budget - std::min(budget, nodes));
      nodes += r.nodes;
      if (r.status == SearchStatus::Unknown) {
        starved = true;
        return true;  // treated as blocked; the overall verdict becomes Unknown
      }
      m = r.status == SearchStatus::Found ? 1 : 0;
    }
    return m == 1;
  }

  // Restricted growth: vertex i may join blocks [0, used] capped at k. Every
  // block stays h-free on the way down, so a full assignment is a witness.
  bool descend(int i, int used) {
    if (i == n) return true;
    const int limit = std::min(used + 1, k);
    for (int b = 0; b < limit; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      blocks[static_cast<std::size_t>(b)] |= bit;
      const bool blocked = contains(blocks[static_cast<std::size_t>(b)]);
      if (!blocked && descend(i + 1, std::max(used, b + 1))) return true;
      blocks[static_cast<std::size_t>(b)] &= ~bit;
      if (starved) return false;
    }
    return false;
  }
};

}  // namespace

PartitionSearch find_partition_avoiding(const Graph& g, const Graph& h, int k, int cap,
                                        std::uint64_t budget) {
  if (k < 2) throw std::invalid_argument("partition search needs k >= 2");
  PartitionSearch out;
  if (g.vertex_count() > cap) {
    out.status = SearchStatus::Unknown;
    return out;
  }
  if (h.vertex_count() == 0) return out;  // every block contains the empty graph

  Scan scan(g, h, k, budget);
  scan.blocks.assign(static_cast<std::size_t>(k), 0);
  const bool found = scan.descend(0, 0);
  out.nodes = scan.nodes;
  if (found) {
    out.status = SearchStatus::Found;
    out.blocks = scan.blocks;
  } else {
    out.status = scan.starved ? SearchStatus::Unknown : SearchStatus::NotFound;
  }
  return out;
}

}  // namespace ramsey
