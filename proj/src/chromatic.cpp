#include "ramsey/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ramsey {
namespace {

std::vector<int> by_degree(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

int greedy_clique(const Graph& g, const std::vector<int>& order) {
  std::uint64_t clique = 0;
  int size = 0;
  for (const int v : order) {
    if ((g.neighbors(v) & clique) == clique) {
      clique |= std::uint64_t{1} << v;
      ++size;
    }
  }
  return size;
}

int dsatur_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(n), 0);  // colors on neighbors
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1, sat = -1, deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      const int s = std::popcount(seen[static_cast<std::size_t>(v)]);
      const int d = g.degree(v);
      if (s > sat || (s == sat && d > deg)) {
        pick = v;
        sat = s;
        deg = d;
      }
    }
    int c = 0;
    while (seen[static_cast<std::size_t>(pick)] >> c & 1) ++c;
    color[static_cast<std::size_t>(pick)] = c;
    used = std::max(used, c + 1);
    for (int u = 0; u < n; ++u)
      if (g.has_edge(pick, u)) seen[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
  }
  return used;
}

struct ColorSearch {
  const Graph& g;
  const std::vector<int>& order;
  int k;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool starved = false;
  std::vector<std::uint64_t> classes;

  bool descend(int pos, int used) {
    if (pos == static_cast<int>(order.size())) return true;
    const int v = order[static_cast<std::size_t>(pos)];
    const int limit = std::min(used + 1, k);  // a fresh color beyond one new class is symmetric
    for (int c = 0; c < limit; ++c) {
      if (++nodes > budget) {
        starved = true;
        return false;
      }
      if ((g.neighbors(v) & classes[static_cast<std::size_t>(c)]) != 0) continue;
      classes[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
      if (descend(pos + 1, std::max(used, c + 1))) return true;
      classes[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << v);
      if (starved) return false;
    }
    return false;
  }
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
  if (g.vertex_count() > 20)
    throw std::invalid_argument("chromatic_number: more than 20 vertices");
  ChromaticResult out;
  const int n = g.vertex_count();
  if (n == 0) return out;
  if (g.edge_count() == 0) {
    out.value = 1;
    return out;
  }

  const std::vector<int> order = by_degree(g);
  const int low = greedy_clique(g, order);
  const int high = dsatur_bound(g);
  for (int k = low; k < high; ++k) {
    ColorSearch s{g, order, k, budget - std::min(budget, out.nodes)};
    s.classes.assign(static_cast<std::size_t>(k), 0);
    const bool ok = s.descend(0, 0);
    out.nodes += s.nodes;
    if (s.starved) {
      out.status = SearchStatus::Unknown;
      return out;
    }
    if (ok) {
      out.value = k;
      return out;
    }
  }
  out.value = high;
  return out;
}

}  // namespace ramsey
