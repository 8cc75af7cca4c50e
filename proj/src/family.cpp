#include "ramsey/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

[[noreturn]] void bad_spec(const std::string& why) {
  throw std::invalid_argument("graph spec: " + why);
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    if (v < 0 || v > 1000000) throw std::out_of_range("");
    return static_cast<int>(v);
  } catch (...) {
    bad_spec("expected a small nonnegative integer for " + what + ", got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

void check_total(int n) {
  if (n > Graph::max_vertices) bad_spec("graph would have " + std::to_string(n) + " vertices, limit is 64");
}

bool is_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (g.edge_count() != n - 1) return false;
  // connectivity by mask expansion
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

}  // namespace

Graph build_complete(int n) {
  if (n < 1) bad_spec("complete graph needs at least 1 vertex");
  check_total(n);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph build_cycle(int len) {
  if (len < 3) bad_spec("cycle needs at least 3 vertices");
  check_total(len);
  Graph g(len);
  for (int v = 0; v < len; ++v) g.add_edge(v, (v + 1) % len);
  return g;
}

Graph build_path(int len) {
  if (len < 1) bad_spec("path needs at least 1 vertex");
  check_total(len);
  Graph g(len);
  for (int v = 0; v + 1 < len; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph build_star(int n) {
  if (n < 1) bad_spec("star needs at least 1 vertex");
  check_total(n);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph build_complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) bad_spec("complete multipartite needs at least one part");
  int total = 0;
  for (const int p : parts) {
    if (p < 1) bad_spec("complete multipartite part sizes must be positive");
    total += p;
  }
  check_total(total);
  Graph g(total);
  int offset_u = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int offset_v = offset_u + parts[i];
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (int u = 0; u < parts[i]; ++u)
        for (int v = 0; v < parts[j]; ++v) g.add_edge(offset_u + u, offset_v + v);
      offset_v += parts[j];
    }
    offset_u += parts[i];
  }
  return g;
}

Graph build_balanced_kpartite(int n, int k) {
  if (k < 1) bad_spec("kpartite needs at least one part");
  if (n < k) bad_spec("kpartite on " + std::to_string(n) + " vertices cannot have " + std::to_string(k) +
                      " nonempty parts");
  check_total(n);
  std::vector<int> parts(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) parts[static_cast<std::size_t>(i)] += 1;  // larger parts first
  return build_complete_multipartite(parts);
}

Graph build_clique_minus_matching(int n) {
  if (n < 2) bad_spec("clique-minus-matching needs at least 2 vertices");
  Graph g = build_complete(n);
  for (int v = 0; v + 1 < n; v += 2) g.remove_edge(v, v + 1);
  return g;
}

Graph build_star_apex(int star_vertices) {
  if (star_vertices < 2) bad_spec("starapex needs a star on at least 2 vertices");
  check_total(star_vertices + 1);
  Graph g(star_vertices + 1);
  for (int v = 1; v < star_vertices; ++v) g.add_edge(0, v);
  for (int v = 0; v < star_vertices; ++v) g.add_edge(star_vertices, v);
  return g;
}

Graph build_tree_apex(const Graph& tree, const std::vector<int>& apex_neighbors) {
  if (!is_tree(tree)) bad_spec("treeapex requires a connected acyclic tree part");
  if (apex_neighbors.empty()) bad_spec("treeapex requires at least one apex neighbour");
  const int nt = tree.vertex_count();
  check_total(nt + 1);
  Graph g(nt + 1);
  for (const auto& [u, v] : tree.edges()) g.add_edge(u, v);
  std::uint64_t seen = 0;
  for (const int v : apex_neighbors) {
    if (v < 0 || v >= nt) bad_spec("treeapex apex neighbour " + std::to_string(v) + " is not a tree vertex");
    if ((seen >> v) & 1u) bad_spec("treeapex apex neighbour listed twice");
    seen |= std::uint64_t{1} << v;
    g.add_edge(nt, v);
  }
  return g;
}

Graph build(const GraphSpec& spec) {
  using F = GraphSpec::Family;
  switch (spec.family) {
    case F::complete:
      return build_complete(spec.params.at(0));
    case F::cycle:
      return build_cycle(spec.params.at(0));
    case F::path:
      return build_path(spec.params.at(0));
    case F::star:
      return build_star(spec.params.at(0));
    case F::complete_multipartite:
      return build_complete_multipartite(spec.params);
    case F::balanced_kpartite: {
      if (spec.params.size() != 2 || spec.params[1] <= 0)
        bad_spec("kpartite needs an explicit vertex count (kpartite:k:n)");
      return build_balanced_kpartite(spec.params[1], spec.params[0]);
    }
    case F::clique_minus_matching:
      return build_clique_minus_matching(spec.params.at(0));
    case F::star_apex:
      return build_star_apex(spec.params.at(0));
    case F::tree_apex:
      return build_tree_apex(build(spec.parts.at(0)), spec.params);
    case F::disjoint_union: {
      if (spec.parts.size() < 2) bad_spec("union needs at least two parts");
      Graph g = build(spec.parts[0]);
      for (std::size_t i = 1; i < spec.parts.size(); ++i) g = disjoint_union(g, build(spec.parts[i]));
      return g;
    }
    case F::complete_join: {
      if (spec.parts.size() < 2) bad_spec("join needs at least two parts");
      Graph g = build(spec.parts[0]);
      for (std::size_t i = 1; i < spec.parts.size(); ++i) g = complete_join(g, build(spec.parts[i]));
      return g;
    }
    case F::graph6:
      return parse_graph6(spec.g6);
  }
  bad_spec("unhandled family");
}

static GraphSpec parse_text(const std::string& text) {
  using Family = GraphSpec::Family;
  const auto colon = text.find(':');
  if (colon == std::string::npos) bad_spec("expected 'family:params', got '" + text + "'");
  const std::string family = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  GraphSpec s;

  const auto single_int = [&](Family f, const std::string& what) {
    s.family = f;
    s.params = {parse_int(rest, what)};
    return s;
  };

  if (family == "complete") return single_int(Family::complete, "vertex count");
  if (family == "cycle") return single_int(Family::cycle, "cycle length");
  if (family == "path") return single_int(Family::path, "path length");
  if (family == "star") return single_int(Family::star, "star size");
  if (family == "cmm") return single_int(Family::clique_minus_matching, "vertex count");
  if (family == "starapex") return single_int(Family::star_apex, "star size");
  if (family == "cmp") {
    s.family = Family::complete_multipartite;
    for (const auto& tok : split(rest, ',')) s.params.push_back(parse_int(tok, "part size"));
    return s;
  }
  if (family == "kpartite") {
    const auto toks = split(rest, ':');
    if (toks.size() != 2) bad_spec("kpartite wants 'kpartite:k:n'");
    s.family = Family::balanced_kpartite;
    s.params = {parse_int(toks[0], "part count"), parse_int(toks[1], "vertex count")};
    return s;
  }
  if (family == "treeapex") {
    const auto toks = split(rest, ',');
    if (toks.size() < 3) bad_spec("treeapex wants 'treeapex:<treefamily>,<treeparam>,<n1+n2+...>'");
    s.family = Family::tree_apex;
    std::string tree_spec = toks[0];
    for (std::size_t i = 1; i + 1 < toks.size(); ++i) tree_spec += ":" + toks[i];
    s.parts.push_back(GraphSpec::parse(tree_spec));
    for (const auto& tok : split(toks.back(), '+')) s.params.push_back(parse_int(tok, "apex neighbour"));
    return s;
  }
  if (family == "union" || family == "join") {
    s.family = family == "union" ? Family::disjoint_union : Family::complete_join;
    for (const auto& tok : split(rest, ';')) {
      if (tok.find(';') != std::string::npos || tok.rfind("union:", 0) == 0 || tok.rfind("join:", 0) == 0)
        bad_spec("nested union/join is only available through the JSON form");
      s.parts.push_back(GraphSpec::parse(tok));
    }
    if (s.parts.size() < 2) bad_spec(family + " needs at least two ';'-separated parts");
    return s;
  }
  if (family == "g6") {
    s.family = Family::graph6;
    s.g6 = rest;
    return s;
  }
  bad_spec("unknown family '" + family + "'");
}

GraphSpec GraphSpec::parse(const std::string& text) {
  GraphSpec s = parse_text(text);
  build(s);  // enforces the documented parameter ranges
  return s;
}

GraphSpec GraphSpec::from_json(const nlohmann::json& j) {
  if (j.is_string()) return GraphSpec::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("family"))
    bad_spec("JSON spec must be a string or an object with a 'family' key");
  const std::string family = j.at("family").get<std::string>();
  GraphSpec s;
  const auto n_param = [&](Family f) {
    s.family = f;
    s.params = {j.at("n").get<int>()};
    return s;
  };
  if (family == "complete") return n_param(Family::complete);
  if (family == "cycle") return n_param(Family::cycle);
  if (family == "path") return n_param(Family::path);
  if (family == "star") return n_param(Family::star);
  if (family == "cmm") return n_param(Family::clique_minus_matching);
  if (family == "starapex") return n_param(Family::star_apex);
  if (family == "cmp") {
    s.family = Family::complete_multipartite;
    s.params = j.at("parts").get<std::vector<int>>();
    return s;
  }
  if (family == "kpartite") {
    s.family = Family::balanced_kpartite;
    s.params = {j.at("k").get<int>(), j.value("n", 0)};
    return s;
  }
  if (family == "treeapex") {
    s.family = Family::tree_apex;
    s.parts.push_back(GraphSpec::from_json(j.at("tree")));
    s.params = j.at("apex_neighbors").get<std::vector<int>>();
    return s;
  }
  if (family == "union" || family == "join") {
    s.family = family == "union" ? Family::disjoint_union : Family::complete_join;
    for (const auto& part : j.at("parts")) s.parts.push_back(GraphSpec::from_json(part));
    return s;
  }
  if (family == "g6") {
    s.family = Family::graph6;
    s.g6 = j.at("g6").get<std::string>();
    return s;
  }
  bad_spec("unknown family '" + family + "'");
}

nlohmann::json GraphSpec::to_json() const {
  using F = Family;
  nlohmann::json j;
  switch (family) {
    case F::complete: j["family"] = "complete"; j["n"] = params.at(0); break;
    case F::cycle: j["family"] = "cycle"; j["n"] = params.at(0); break;
    case F::path: j["family"] = "path"; j["n"] = params.at(0); break;
    case F::star: j["family"] = "star"; j["n"] = params.at(0); break;
    case F::clique_minus_matching: j["family"] = "cmm"; j["n"] = params.at(0); break;
    case F::star_apex: j["family"] = "starapex"; j["n"] = params.at(0); break;
    case F::complete_multipartite: j["family"] = "cmp"; j["parts"] = params; break;
    case F::balanced_kpartite:
      j["family"] = "kpartite";
      j["k"] = params.at(0);
      if (params.size() > 1 && params[1] > 0) j["n"] = params[1];
      break;
    case F::tree_apex:
      j["family"] = "treeapex";
      j["tree"] = parts.at(0).to_json();
      j["apex_neighbors"] = params;
      break;
    case F::disjoint_union:
    case F::complete_join: {
      j["family"] = family == F::disjoint_union ? "union" : "join";
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : parts) arr.push_back(p.to_json());
      j["parts"] = arr;
      break;
    }
    case F::graph6: j["family"] = "g6"; j["g6"] = g6; break;
  }
  return j;
}

std::string GraphSpec::str() const {
  using F = Family;
  const auto join_ints = [](const std::vector<int>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out.push_back(sep);
      out += std::to_string(xs[i]);
    }
    return out;
  };
  switch (family) {
    case F::complete: return "complete:" + std::to_string(params.at(0));
    case F::cycle: return "cycle:" + std::to_string(params.at(0));
    case F::path: return "path:" + std::to_string(params.at(0));
    case F::star: return "star:" + std::to_string(params.at(0));
    case F::clique_minus_matching: return "cmm:" + std::to_string(params.at(0));
    case F::star_apex: return "starapex:" + std::to_string(params.at(0));
    case F::complete_multipartite: return "cmp:" + join_ints(params, ',');
    case F::balanced_kpartite:
      return "kpartite:" + std::to_string(params.at(0)) +
             (params.size() > 1 && params[1] > 0 ? ":" + std::to_string(params[1]) : "");
    case F::tree_apex: {
      std::string tree = parts.at(0).str();
      std::replace(tree.begin(), tree.end(), ':', ',');
      return "treeapex:" + tree + "," + join_ints(params, '+');
    }
    case F::disjoint_union:
    case F::complete_join: {
      std::string out = family == F::disjoint_union ? "union:" : "join:";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(';');
        out += parts[i].str();
      }
      return out;
    }
    case F::graph6: return "g6:" + g6;
  }
  return "?";
}

std::string canonical_key(const Graph& g) {
  if (is_complete(g)) return "complete:" + std::to_string(g.vertex_count());
  if (is_clique_minus_matching(g)) return "cmm:" + std::to_string(g.vertex_count());
  return "g6:" + emit_graph6(g);
}

}  // namespace ramsey
