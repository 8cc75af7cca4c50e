#include "ramsey/subgraph.hpp"

#include <algorithm>

namespace ramsey {

namespace {

struct Searcher {
  const Graph& host;
  const Graph& pattern;
  const std::vector<std::uint64_t>* forbidden;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  std::vector<int> order;                  // pattern vertices, assignment order
  std::vector<std::uint64_t> placed_nbrs;  // per position: mask of earlier positions adjacent in pattern
  std::vector<std::uint64_t> degree_ok;    // per position: host vertices with enough degree
  std::vector<int> map;                    // position -> host vertex
  std::uint64_t used = 0;

  Searcher(const Graph& h, const Graph& p, std::uint64_t b, const std::vector<std::uint64_t>* f)
      : host(h), pattern(p), forbidden(f), budget(b) {}

  void finish_order(std::uint64_t preordered_mask) {
    const int np = pattern.vertex_count();
    while (static_cast<int>(order.size()) < np) {
      int best = -1;
      int best_placed = -1;
      for (int p = 0; p < np; ++p) {
        if ((preordered_mask >> p) & 1u) continue;
        const int placed = std::popcount(pattern.neighbors(p) & preordered_mask);
        if (placed > best_placed ||
            (placed == best_placed && pattern.degree(p) > pattern.degree(best))) {
          best = p;
          best_placed = placed;
        }
      }
      order.push_back(best);
      preordered_mask |= std::uint64_t{1} << best;
    }
    const int nh = host.vertex_count();
    placed_nbrs.assign(order.size(), 0);
    degree_ok.assign(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (pattern.has_edge(order[i], order[j])) placed_nbrs[i] |= std::uint64_t{1} << j;
      for (int h = 0; h < nh; ++h)
        if (host.degree(h) >= pattern.degree(order[i])) degree_ok[i] |= std::uint64_t{1} << h;
    }
    map.assign(order.size(), -1);
  }

  bool image_allowed() const {
    if (!forbidden) return true;
    std::uint64_t image = 0;
    for (const int v : map) image |= std::uint64_t{1} << v;
    return std::find(forbidden->begin(), forbidden->end(), image) == forbidden->end();
  }

  // Returns Found / NotFound / Unknown for positions [depth, end).
  SearchStatus extend(std::size_t depth) {
    if (depth == order.size()) return image_allowed() ? SearchStatus::Found : SearchStatus::NotFound;
    std::uint64_t cand = host.vertex_mask() & degree_ok[depth] & ~used;
    std::uint64_t nb = placed_nbrs[depth];
    while (nb) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(nb));
      nb &= nb - 1;
      cand &= host.neighbors(map[j]);
    }
    bool ran_out = false;
    while (cand) {
      const int h = std::countr_zero(cand);
      cand &= cand - 1;
      if (++nodes > budget) return SearchStatus::Unknown;
      map[depth] = h;
      used |= std::uint64_t{1} << h;
      const SearchStatus sub = extend(depth + 1);
      used &= ~(std::uint64_t{1} << h);
      if (sub == SearchStatus::Found) return sub;
      if (sub == SearchStatus::Unknown) ran_out = true;
      map[depth] = -1;
    }
    return ran_out ? SearchStatus::Unknown : SearchStatus::NotFound;
  }

  SubgraphResult result(SearchStatus status) const {
    SubgraphResult r;
    r.status = status;
    r.nodes = nodes;
    if (status == SearchStatus::Found) {
      r.embedding.map.assign(static_cast<std::size_t>(pattern.vertex_count()), -1);
      for (std::size_t i = 0; i < order.size(); ++i) r.embedding.map[static_cast<std::size_t>(order[i])] = map[i];
    }
    return r;
  }
};

}  // namespace

SubgraphResult find_subgraph(const Graph& host, const Graph& pattern, std::uint64_t node_budget,
                             const std::vector<std::uint64_t>* forbidden) {
  if (pattern.vertex_count() > host.vertex_count()) return {SearchStatus::NotFound, {}, 0};
  Searcher s(host, pattern, node_budget, forbidden);
  s.finish_order(0);
  return s.result(s.extend(0));
}

SubgraphResult find_subgraph_using_edge(const Graph& host, const Graph& pattern, int u, int v,
                                        std::uint64_t node_budget,
                                        const std::vector<std::uint64_t>* forbidden) {
  SubgraphResult out;
  if (!host.has_edge(u, v)) return out;
  if (pattern.vertex_count() > host.vertex_count()) return out;
  bool ran_out = false;
  for (const auto& [a, b] : pattern.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const int pa = flip ? b : a;
      const int pb = flip ? a : b;
      const int hu = u;
      const int hv = v;
      if (host.degree(hu) < pattern.degree(pa) || host.degree(hv) < pattern.degree(pb)) continue;
      Searcher s(host, pattern, node_budget - std::min(node_budget, out.nodes), forbidden);
      s.order = {pa, pb};
      s.finish_order((std::uint64_t{1} << pa) | (std::uint64_t{1} << pb));
      s.map[0] = hu;
      s.map[1] = hv;
      s.used = (std::uint64_t{1} << hu) | (std::uint64_t{1} << hv);
      const SearchStatus st = s.extend(2);
      out.nodes += s.nodes;
      if (st == SearchStatus::Found) {
        const SubgraphResult r = s.result(st);
        out.status = SearchStatus::Found;
        out.embedding = r.embedding;
        return out;
      }
      if (st == SearchStatus::Unknown) ran_out = true;
    }
  }
  out.status = ran_out ? SearchStatus::Unknown : SearchStatus::NotFound;
  return out;
}

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
  const int np = pattern.vertex_count();
  if (static_cast<int>(emb.map.size()) != np) return false;
  std::uint64_t used = 0;
  for (const int h : emb.map) {
    if (h < 0 || h >= host.vertex_count()) return false;
    if ((used >> h) & 1u) return false;
    used |= std::uint64_t{1} << h;
  }
  for (const auto& [a, b] : pattern.edges())
    if (!host.has_edge(emb.map[static_cast<std::size_t>(a)], emb.map[static_cast<std::size_t>(b)])) return false;
  return true;
}

}  // namespace ramsey
