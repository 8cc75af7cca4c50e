#include <functional>
#include <vector>

#include "doctest.h"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/reference.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/subgraph.hpp"

using namespace ramsey;

namespace {

Graph random_graph(int n, std::uint64_t key, std::uint64_t thr = u53_one / 2) {
  Graph g(n);
  int index = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++index)
      if (edge_u53(key, index) < thr) g.add_edge(u, v);
  return g;
}

// Exists an embedding whose image uses host edge {u, v} as a pattern edge.
bool naive_uses_edge(const Graph& host, const Graph& pattern, int u, int v) {
  std::vector<int> map(static_cast<std::size_t>(pattern.vertex_count()), -1);
  std::uint64_t used = 0;
  std::function<bool(int)> go = [&](int i) {
    if (i == pattern.vertex_count()) {
      for (const auto& [a, b] : pattern.edges()) {
        const int x = map[static_cast<std::size_t>(a)], y = map[static_cast<std::size_t>(b)];
        if ((x == u && y == v) || (x == v && y == u)) return true;
      }
      return false;
    }
    for (int w = 0; w < host.vertex_count(); ++w) {
      if (used >> w & 1) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.has_edge(i, j) && !host.has_edge(w, map[static_cast<std::size_t>(j)]))
          ok = false;
      if (!ok) continue;
      map[static_cast<std::size_t>(i)] = w;
      used |= std::uint64_t{1} << w;
      if (go(i + 1)) return true;
      used &= ~(std::uint64_t{1} << w);
      map[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace

TEST_CASE("agrees with the naive scan on random hosts up to 7 vertices") {
  const std::vector<Graph> patterns = {build_complete(3), build_cycle(4), build_path(4),
                                       build_complete(4), build_star(4)};
  for (int n = 3; n <= 7; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const Graph host = random_graph(n, mix_chain(11, static_cast<std::uint64_t>(n * 100 + trial)));
      for (const Graph& pat : patterns) {
        const SubgraphResult r = find_subgraph(host, pat);
        REQUIRE(r.status != SearchStatus::Unknown);
        CHECK((r.status == SearchStatus::Found) == ref::contains_subgraph(host, pat));
        if (r.status == SearchStatus::Found) CHECK(verify_embedding(host, pat, r.embedding));
      }
    }
  }
}

TEST_CASE("the two-fold join of cmm:4 contains cmm:7 but K_7 needs the clique join") {
  const Graph join2 = complete_join(build_clique_minus_matching(4), build_clique_minus_matching(4));
  CHECK(find_subgraph(join2, build_clique_minus_matching(7)).status == SearchStatus::Found);
  CHECK(find_subgraph(join2, build_complete(7)).status == SearchStatus::NotFound);
  const Graph join_cliques = complete_join(build_complete(4), build_complete(3));
  CHECK(find_subgraph(join_cliques, build_complete(7)).status == SearchStatus::Found);
}

TEST_CASE("found embeddings survive host growth") {
  Graph host = build_cycle(6);
  const Graph pat = build_path(4);
  REQUIRE(find_subgraph(host, pat).status == SearchStatus::Found);
  host.add_edge(0, 3);
  host.add_edge(1, 4);
  CHECK(find_subgraph(host, pat).status == SearchStatus::Found);
}

TEST_CASE("a starved search reports Unknown, never NotFound") {
  const Graph host = build_complete(12);
  const Graph pat = build_complete(11);
  const SubgraphResult r = find_subgraph(host, pat, 3);
  CHECK(r.status == SearchStatus::Unknown);
}

TEST_CASE("edge-anchored search matches a naive edge-using scan") {
  const Graph k3 = build_complete(3);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const Graph host = random_graph(n, mix_chain(77, static_cast<std::uint64_t>(n * 100 + trial)));
      for (const auto& [u, v] : host.edges()) {
        const SubgraphResult r = find_subgraph_using_edge(host, k3, u, v);
        REQUIRE(r.status != SearchStatus::Unknown);
        CHECK((r.status == SearchStatus::Found) == naive_uses_edge(host, k3, u, v));
      }
    }
  }
}

TEST_CASE("forbidden vertex sets suppress exactly those copies") {
  const Graph host = build_complete(4);
  const Graph k3 = build_complete(3);
  std::vector<std::uint64_t> forbid;
  for (std::uint64_t s : {0b0111ull, 0b1011ull, 0b1101ull, 0b1110ull}) forbid.push_back(s);
  CHECK(find_subgraph(host, k3, default_subgraph_budget, &forbid).status ==
        SearchStatus::NotFound);
  forbid.pop_back();
  const SubgraphResult r = find_subgraph(host, k3, default_subgraph_budget, &forbid);
  REQUIRE(r.status == SearchStatus::Found);
  std::uint64_t image = 0;
  for (const int w : r.embedding.map) image |= std::uint64_t{1} << w;
  CHECK(image == 0b1110ull);
}
