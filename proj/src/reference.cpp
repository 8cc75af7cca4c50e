#include "ramsey/reference.hpp"

#include <bit>
#include <stdexcept>

namespace ramsey::ref {
namespace {

bool extend_map(const Graph& host, const Graph& pattern, std::vector<int>& map,
                std::uint64_t used, int next) {
  if (next == pattern.vertex_count()) return true;
  for (int hv = 0; hv < host.vertex_count(); ++hv) {
    if (used >> hv & 1) continue;
    bool ok = true;
    for (int pv = 0; pv < next && ok; ++pv)
      if (pattern.has_edge(pv, next) && !host.has_edge(map[pv], hv)) ok = false;
    if (!ok) continue;
    map[next] = hv;
    if (extend_map(host, pattern, map, used | (std::uint64_t{1} << hv), next + 1))
      return true;
    map[next] = -1;
  }
  return false;
}

Rational d2_of(int v, int e) {
  if (e == 0) return Rational(0);
  if (v == 2) return {1, 2};
  return {e - 1, v - 2};
}

// Visits every subgraph of g as (vertex subset, edge subset of the induced
// graph) and feeds (v, e, proper?) to the callback.
template <class F>
void for_each_subgraph(const Graph& g, F f) {
  const int n = g.vertex_count();
  const std::uint64_t full = g.vertex_mask();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const Graph ind = g.induced(s);
    const int ecount = ind.edge_count();
    if (ecount > 30) throw std::invalid_argument("subgraph enumeration: too many edges");
    for (std::uint64_t em = 0; em < (std::uint64_t{1} << ecount); ++em) {
      const bool proper = s != full || em + 1 != (std::uint64_t{1} << ecount);
      f(ind.vertex_count(), std::popcount(em), proper);
    }
  }
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return false;
  if (pattern.vertex_count() == 0) return true;
  std::vector<int> map(static_cast<std::size_t>(pattern.vertex_count()), -1);
  return extend_map(host, pattern, map, 0, 0);
}

ArrowScan arrow_scan(const Graph& host, const Graph& red_pattern, const Graph& blue_pattern) {
  const auto edges = host.edges();
  const int e = static_cast<int>(edges.size());
  if (e > 30) throw std::invalid_argument("arrow_scan: too many edges to enumerate");
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << e); ++c) {
    Graph red(host.vertex_count());
    Graph blue(host.vertex_count());
    for (int i = 0; i < e; ++i) {
      const bool is_red = c >> (e - 1 - i) & 1;
      (is_red ? red : blue).add_edge(edges[i].first, edges[i].second);
    }
    if (contains_subgraph(red, red_pattern)) continue;
    if (contains_subgraph(blue, blue_pattern)) continue;
    ArrowScan out;
    out.good_red.resize(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) out.good_red[static_cast<std::size_t>(i)] = c >> (e - 1 - i) & 1;
    return out;
  }
  ArrowScan out;
  out.arrows = true;
  return out;
}

Rational m2_over_subgraphs(const Graph& g) {
  Rational best(0);
  for_each_subgraph(g, [&](int v, int e, bool) {
    const Rational d = d2_of(v, e);
    if (best < d) best = d;
  });
  return best;
}

bool strictly_2_balanced(const Graph& g) {
  const Rational whole = d2_of(g.vertex_count(), g.edge_count());
  bool strict = true;
  for_each_subgraph(g, [&](int v, int e, bool proper) {
    if (proper && !(d2_of(v, e) < whole)) strict = false;
  });
  return strict;
}

Rational asym_over_subgraphs(const Graph& h1, const Graph& h2) {
  const Rational inv = m2_over_subgraphs(h2).inverse();
  Rational best(0);
  bool any = false;
  for_each_subgraph(h1, [&](int v, int e, bool) {
    if (e == 0) return;
    const Rational val = Rational(e) / (Rational(v - 2) + inv);
    if (!any || best < val) best = val;
    any = true;
  });
  if (!any) throw std::invalid_argument("asym_over_subgraphs: h1 has no edges");
  return best;
}

Rational m_over_subgraphs(const Graph& g) {
  Rational best(0);
  for_each_subgraph(g, [&](int v, int e, bool) {
    const Rational val(e, v);
    if (best < val) best = val;
  });
  return best;
}

}  // namespace ramsey::ref
