#include "ramsey/graph.hpp"

namespace ramsey {

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  if (na + nb > Graph::max_vertices)
    throw std::invalid_argument("disjoint_union: result exceeds 64 vertices");
  Graph out(na + nb);
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(na + u, na + v);
  return out;
}

Graph complete_join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) out.add_edge(u, na + v);
  return out;
}

bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_clique_minus_matching(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return false;
  const Graph co = g.complement();
  if (co.edge_count() != n / 2) return false;
  for (int v = 0; v < n; ++v)
    if (co.degree(v) > 1) return false;
  return co.edge_count() >= 1;
}

}  // namespace ramsey
