#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Red/blue assignment indexed by the canonical edge list of a host graph.
class EdgeColoring {
 public:
  explicit EdgeColoring(const Graph& host)
      : host_(host), edges_(host.edges()), red_(edges_.size(), 0) {}

  EdgeColoring(const Graph& host, std::vector<std::uint8_t> red)
      : host_(host), edges_(host.edges()), red_(std::move(red)) {
    if (red_.size() != edges_.size())
      throw std::invalid_argument("coloring length does not match the edge count");
  }

  const Graph& host() const { return host_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool red(int index) const { return red_.at(static_cast<std::size_t>(index)) != 0; }
  void set_red(int index, bool r) { red_.at(static_cast<std::size_t>(index)) = r ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return red_; }

  Graph red_subgraph() const { return side(true); }
  Graph blue_subgraph() const { return side(false); }

 private:
  Graph side(bool want_red) const {
    Graph g(host_.vertex_count());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if ((red_[i] != 0) == want_red) g.add_edge(edges_[i].first, edges_[i].second);
    return g;
  }

  Graph host_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint8_t> red_;
};

}  // namespace ramsey
