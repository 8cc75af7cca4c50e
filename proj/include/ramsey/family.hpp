#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Symbolic description of a graph. Text grammar is "family:params":
//
//   complete:7            clique K_7
//   cycle:5  path:4       cycle / path on that many vertices
//   star:5                star on 5 vertices, center 0
//   cmp:4,4,4             complete multipartite, parts in label order
//   kpartite:3:10         balanced complete 3-partite on 10 vertices,
//                         larger parts first
//   cmm:7                 K_7 minus a maximum matching {0,1},{2,3},{4,5}
//   starapex:4            star on 4 vertices plus an apex joined to all of
//                         them; the apex is the last vertex
//   treeapex:path,4,0+3   tree plus an apex adjacent to the listed tree
//                         vertices (apex last); tree family and its params
//                         come first, apex neighbours are '+'-separated
//   union:cmm:4;cmm:4     disjoint union, ';'-separated parts
//   join:cmm:4;cmm:4      complete join, ';'-separated parts
//   g6:D~{                verbatim graph6
//
// union/join parts may be any non-nested spec; deeper nesting goes through the
// JSON form, which mirrors this structure field by field.
struct GraphSpec {
  enum class Family {
    complete,
    cycle,
    path,
    star,
    complete_multipartite,
    balanced_kpartite,
    clique_minus_matching,
    star_apex,
    tree_apex,
    disjoint_union,
    complete_join,
    graph6,
  };

  Family family = Family::complete;
  std::vector<int> params;        // sizes; for tree_apex the apex neighbours
  std::vector<GraphSpec> parts;   // union/join members; tree_apex tree at [0]
  std::string g6;

  static GraphSpec parse(const std::string& text);
  static GraphSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  std::string str() const;
};

Graph build(const GraphSpec& spec);

Graph build_complete(int n);
Graph build_cycle(int len);
Graph build_path(int len);
Graph build_star(int n);
Graph build_complete_multipartite(const std::vector<int>& parts);
Graph build_balanced_kpartite(int n, int k);
Graph build_clique_minus_matching(int n);
Graph build_star_apex(int star_vertices);
Graph build_tree_apex(const Graph& tree, const std::vector<int>& apex_neighbors);

// Registry key: recognises cliques and cliques-minus-matching, anything else
// falls back to its graph6 encoding.
std::string canonical_key(const Graph& g);

}  // namespace ramsey
