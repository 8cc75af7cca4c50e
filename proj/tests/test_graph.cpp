#include <bit>
#include <vector>

#include "doctest.h"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/reference.hpp"

using namespace ramsey;

TEST_CASE("edge bookkeeping and canonical edge order") {
  Graph g(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(3, 1));
  const auto e = g.edges();
  REQUIRE(e.size() == 2);
  CHECK(e[0] == std::pair<int, int>{0, 2});
  CHECK(e[1] == std::pair<int, int>{1, 3});
  CHECK_THROWS(g.add_edge(0, 0));
}

TEST_CASE("induced subgraph relabels ascending") {
  const Graph c5 = build_cycle(5);
  const Graph p = c5.induced(0b11011);  // drop vertex 2
  CHECK(p.vertex_count() == 4);
  // path 1-0-4-3 after relabeling {0,1,3,4} -> {0,1,2,3}
  CHECK(p.edge_count() == 3);
  CHECK(p.has_edge(0, 1));
  CHECK(p.has_edge(0, 3));
  CHECK(p.has_edge(2, 3));
}

TEST_CASE("family counts and fixed labelings") {
  CHECK(build_complete(7).edge_count() == 21);
  CHECK(build_cycle(5).edge_count() == 5);
  CHECK(build_path(4).edge_count() == 3);

  const Graph star = build_star(5);
  CHECK(star.edge_count() == 4);
  for (int v = 1; v < 5; ++v) CHECK(star.has_edge(0, v));  // center 0

  const Graph cmm = build_clique_minus_matching(7);
  CHECK(cmm.edge_count() == 21 - 3);  // matching {0,1},{2,3},{4,5}
  CHECK_FALSE(cmm.has_edge(0, 1));
  CHECK_FALSE(cmm.has_edge(2, 3));
  CHECK_FALSE(cmm.has_edge(4, 5));
  CHECK(cmm.degree(6) == 6);

  const Graph sa = build_star_apex(4);
  CHECK(sa.vertex_count() == 5);
  CHECK(sa.edge_count() == 7);  // 2t-1 at t=4
  CHECK(sa.degree(4) == 4);     // apex last

  const Graph kp = build_balanced_kpartite(10, 3);
  CHECK(kp.vertex_count() == 10);
  // parts 4,3,3: edges = (4*3 + 4*3 + 3*3)
  CHECK(kp.edge_count() == 33);
  CHECK_FALSE(kp.has_edge(0, 1));  // larger part first
  CHECK_FALSE(kp.has_edge(0, 3));
  CHECK(kp.has_edge(0, 4));
}

TEST_CASE("complete join and disjoint union") {
  const Graph a = build_complete(2);
  const Graph b = build_path(3);
  const Graph u = disjoint_union(a, b);
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
  const Graph j = complete_join(a, b);
  CHECK(j.edge_count() == 3 + 6);
  CHECK(j.has_edge(0, 4));
}

TEST_CASE("shape predicates") {
  CHECK(is_complete(build_complete(6)));
  CHECK_FALSE(is_complete(build_clique_minus_matching(6)));
  CHECK(is_clique_minus_matching(build_clique_minus_matching(7)));
  CHECK(is_clique_minus_matching(build_clique_minus_matching(8)));
  CHECK_FALSE(is_clique_minus_matching(build_complete(6)));
  CHECK_FALSE(is_clique_minus_matching(build_cycle(5)));
}

TEST_CASE("every 4 vertices of cmm:7 hold a 4-cycle") {
  const Graph cmm = build_clique_minus_matching(7);
  const Graph c4 = build_cycle(4);
  for (std::uint64_t s = 0; s < (1u << 7); ++s) {
    if (std::popcount(s) != 4) continue;
    CHECK(ref::contains_subgraph(cmm.induced(s), c4));
  }
}

TEST_CASE("graph6 round trips bit-exactly") {
  const std::vector<Graph> samples = {
      Graph(0),         build_complete(1),           build_complete(5),
      build_cycle(7),   build_clique_minus_matching(8), build_star_apex(6),
      build_balanced_kpartite(12, 3),
  };
  for (const Graph& g : samples) {
    const Graph back = parse_graph6(emit_graph6(g));
    REQUIRE(back.vertex_count() == g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        CHECK(back.has_edge(u, v) == g.has_edge(u, v));
  }
  CHECK(emit_graph6(build_complete(5)) == "D~{");
}

TEST_CASE("graph6 errors carry the byte offset") {
  try {
    parse_graph6("D~{ ");
    FAIL("expected a parse error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset == 3);
  }
  try {
    parse_graph6("D\x20");
    FAIL("expected a parse error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset == 1);
  }
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  // short payload
  CHECK_THROWS_AS(parse_graph6("D~"), Graph6Error);
}

TEST_CASE("spec text round trips through json and back") {
  for (const char* text : {"complete:7", "cycle:5", "cmp:4,4,4", "kpartite:3:10", "cmm:7",
                           "starapex:4", "treeapex:path,4,0+3", "union:cmm:4;cmm:4",
                           "join:complete:3;complete:3"}) {
    const GraphSpec spec = GraphSpec::parse(text);
    const GraphSpec back = GraphSpec::from_json(spec.to_json());
    const Graph g1 = build(spec);
    const Graph g2 = build(back);
    CHECK(g1.vertex_count() == g2.vertex_count());
    CHECK(g1.edges() == g2.edges());
  }
  CHECK_THROWS(GraphSpec::parse("complete"));
  CHECK_THROWS(GraphSpec::parse("complete:0"));
  CHECK_THROWS(GraphSpec::parse("nosuch:4"));
}

TEST_CASE("treeapex builds the odd cycles used by the corollaries") {
  const Graph c5 = build(GraphSpec::parse("treeapex:path,4,0+3"));
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(ref::contains_subgraph(c5, build_cycle(5)));
  const Graph c7 = build(GraphSpec::parse("treeapex:path,6,0+5"));
  CHECK(ref::contains_subgraph(c7, build_cycle(7)));
}

TEST_CASE("canonical keys for registry lookup") {
  CHECK(canonical_key(build_complete(7)) == "complete:7");
  CHECK(canonical_key(build_clique_minus_matching(4)) == "cmm:4");
  CHECK(canonical_key(build_cycle(5)).rfind("g6:", 0) == 0);
}
