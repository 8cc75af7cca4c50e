#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Simple undirected graph on at most 64 labelled vertices, one adjacency
// bitmask per vertex. No loops, no parallel edges. All algorithms in this
// project lean on the masks: induced-subgraph edge counts, candidate sets in
// the embedding search and the coloring engine are all single AND/popcount
// operations.
class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() : n_(0) {}

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
      throw std::invalid_argument("Graph: vertex count must be in [0, 64], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    int twice = 0;
    for (const std::uint64_t m : adj_) twice += std::popcount(m);
    return twice / 2;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop edge rejected");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  }

  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  // All vertices as a mask; for n == 64 this is ~0.
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  // Number of edges with both ends inside `subset`.
  int edges_inside(std::uint64_t subset) const {
    int twice = 0;
    std::uint64_t rest = subset & vertex_mask();
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      twice += std::popcount(adj_[static_cast<std::size_t>(v)] & subset);
    }
    return twice / 2;
  }

  // Induced subgraph on `subset`, vertices relabelled in ascending order.
  Graph induced(std::uint64_t subset) const {
    subset &= vertex_mask();
    std::vector<int> label(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
      if ((subset >> v) & 1u) label[static_cast<std::size_t>(v)] = next++;
    Graph out(next);
    for (int v = 0; v < n_; ++v) {
      if (label[static_cast<std::size_t>(v)] < 0) continue;
      std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & subset;
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (u > v) out.add_edge(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(u)]);
      }
    }
    return out;
  }

  Graph complement() const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v)
      out.adj_[static_cast<std::size_t>(v)] =
          ~adj_[static_cast<std::size_t>(v)] & vertex_mask() & ~(std::uint64_t{1} << v);
    return out;
  }

  // Edges in canonical order: (0,1),(0,2),...,(0,n-1),(1,2),... This ordering
  // is the contract for edge indices in colorings and certificates.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
      std::uint64_t nb = adj_[static_cast<std::size_t>(u)] >> (u + 1);
      while (nb) {
        const int v = u + 1 + std::countr_zero(nb);
        nb &= nb - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

// Disjoint union: vertices of `b` are shifted past those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

// Join: disjoint union plus every edge between the two sides.
Graph complete_join(const Graph& a, const Graph& b);

bool is_complete(const Graph& g);

// True when the complement's edges form a matching of size floor(n/2),
// i.e. the graph is a clique minus a maximum matching.
bool is_clique_minus_matching(const Graph& g);

}  // namespace ramsey
