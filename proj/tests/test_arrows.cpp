#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ramsey/arrows.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/reference.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

Graph random_graph(int n, std::uint64_t key, std::uint64_t num = 1, std::uint64_t den = 2) {
  Graph g(n);
  int index = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++index)
      if (edge_u53(key, index) < u53_one / den * num) g.add_edge(u, v);
  return g;
}

EdgeColoring color_red_edges(const Graph& host, const std::vector<std::pair<int, int>>& red) {
  EdgeColoring col(host);
  for (int i = 0; i < col.edge_count(); ++i)
    for (const auto& [u, v] : red)
      if (col.edges()[static_cast<std::size_t>(i)] == std::make_pair(u, v)) col.set_red(i, true);
  return col;
}

std::vector<std::uint64_t> all_triples(int n) {
  std::vector<std::uint64_t> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        out.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c));
  return out;
}

}  // namespace

TEST_CASE("triangle Ramsey threshold sits between K5 and K6") {
  const Graph k3 = build_complete(3);
  CHECK(search_arrow(build_complete(6), k3, k3).verdict == ArrowVerdict::Ramsey);

  const ArrowResult r5 = search_arrow(build_complete(5), k3, k3);
  REQUIRE(r5.verdict == ArrowVerdict::NotRamsey);

  // the certificate is good and matches the naive scan's lex-first coloring
  const EdgeColoring col(build_complete(5), r5.good_red);
  CHECK(find_mono_copy(col, k3, k3).status == SearchStatus::NotFound);
  CHECK(r5.good_red == ref::arrow_scan(build_complete(5), k3, k3).good_red);
}

TEST_CASE("edgeless patterns are rejected") {
  CHECK_THROWS(search_arrow(build_complete(4), Graph(2), build_complete(3)));
  CHECK_THROWS(search_arrow(build_complete(4), build_complete(3), Graph(1)));
}

TEST_CASE("verdict agrees with the naive scan on small hosts") {
  const Graph k3 = build_complete(3);
  const Graph c4 = build_cycle(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph host = random_graph(5, mix_chain(101, static_cast<std::uint64_t>(trial)));
    if (host.edge_count() == 0 || host.edge_count() > 12) continue;
    for (const auto& [rp, bp] : {std::pair{k3, k3}, {k3, c4}, {c4, c4}}) {
      const ArrowResult got = search_arrow(host, rp, bp);
      const ref::ArrowScan want = ref::arrow_scan(host, rp, bp);
      CHECK(got.verdict == (want.arrows ? ArrowVerdict::Ramsey : ArrowVerdict::NotRamsey));
      if (!want.arrows) CHECK(got.good_red == want.good_red);
    }
  }
}

TEST_CASE("color swap flips the verdict symmetrically") {
  const Graph k3 = build_complete(3);
  const Graph c4 = build_cycle(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph host = random_graph(6, mix_chain(113, static_cast<std::uint64_t>(trial)));
    if (host.edge_count() == 0) continue;
    CHECK(search_arrow(host, k3, c4).verdict == search_arrow(host, c4, k3).verdict);
  }
}

TEST_CASE("adding vertices or edges never destroys a Ramsey verdict") {
  const Graph k3 = build_complete(3);
  const Graph bigger = disjoint_union(build_complete(6), Graph(1));
  CHECK(search_arrow(bigger, k3, k3).verdict == ArrowVerdict::Ramsey);

  Graph host = build_complete(6);
  host = disjoint_union(host, Graph(1));
  Graph host2 = host;
  host2.add_edge(0, 6);
  CHECK(search_arrow(host2, k3, k3).verdict == ArrowVerdict::Ramsey);
}

TEST_CASE("orbit pruning changes nothing observable on complete hosts") {
  const Graph k3 = build_complete(3);
  const Graph k4 = build_complete(4);
  ArrowOptions plain;
  plain.orbit_pruning = false;
  for (int n = 4; n <= 7; ++n) {
    const Graph host = build_complete(n);
    for (const auto& [rp, bp] : {std::pair{k3, k3}, {k3, k4}}) {
      const ArrowResult pruned = search_arrow(host, rp, bp);
      const ArrowResult flat = search_arrow(host, rp, bp, plain);
      CHECK(pruned.verdict == flat.verdict);
      CHECK(pruned.good_red == flat.good_red);
    }
  }
}

TEST_CASE("budget starvation reports Unknown") {
  ArrowOptions opts;
  opts.node_budget = 10;
  CHECK(search_arrow(build_complete(6), build_complete(3), build_complete(3), opts).verdict ==
        ArrowVerdict::Unknown);
}

TEST_CASE("find_mono_copy searches red before blue") {
  const Graph host = build_complete(6);
  const Graph k3 = build_complete(3);
  // red triangle on {0,1,2}, everything else blue: both colors contain K3
  const EdgeColoring col = color_red_edges(host, {{0, 1}, {0, 2}, {1, 2}});
  const MonoCopy copy = find_mono_copy(col, k3, k3);
  REQUIRE(copy.status == SearchStatus::Found);
  CHECK(copy.color == MonoColor::red);
  CHECK(copy.embedding.vertex_set() == 0b111ull);
}

TEST_CASE("pentagon decomposition of K5 has no monochromatic triangle") {
  const Graph host = build_complete(5);
  const EdgeColoring col =
      color_red_edges(host, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const Graph k3 = build_complete(3);
  CHECK(find_mono_copy(col, k3, k3).status == SearchStatus::NotFound);
}

TEST_CASE("robust query ignores only the listed copies") {
  const Graph k3 = build_complete(3);
  RobustQuery one;
  one.forbidden_blue = {0b111ull};
  // one excused blue triangle is not enough to break K6
  CHECK(robust_arrow(build_complete(6), k3, k3, one).verdict == ArrowVerdict::Ramsey);

  RobustQuery all;
  all.forbidden_red = all_triples(6);
  all.forbidden_blue = all_triples(6);
  // excusing every triple makes every coloring good
  const ArrowResult r = robust_arrow(build_complete(6), k3, k3, all);
  REQUIRE(r.verdict == ArrowVerdict::NotRamsey);
  CHECK(r.good_red == std::vector<std::uint8_t>(15, 0));
}

TEST_CASE("global arrow over vertex subsets") {
  const Graph k3 = build_complete(3);
  const Graph host = build_complete(7);

  CHECK(global_arrow(host, k3, k3, Rational(6, 7)).verdict == ArrowVerdict::Ramsey);

  const GlobalArrowResult g = global_arrow(host, k3, k3, Rational(5, 7));
  REQUIRE(g.verdict == ArrowVerdict::NotRamsey);
  const Graph induced = host.induced(g.witness_subset);
  CHECK(induced.vertex_count() == 5);
  const EdgeColoring col(induced, g.good_red);
  CHECK(find_mono_copy(col, k3, k3).status == SearchStatus::NotFound);
}
