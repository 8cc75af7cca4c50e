#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/density.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/partitions.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

enum class CheckStatus { Verified, Failed, Assumed, Unknown };

const char* to_string(CheckStatus s);

struct ConditionReport {
  std::string id;
  CheckStatus status = CheckStatus::Unknown;
  std::string evidence;  // exact rationals and witnesses, re-checkable by hand
};

struct AuxChoice {
  std::string role;    // "H", "K'", "G'", "K''"
  std::string detail;  // e.g. "K minus vertex 0"
  std::string g6;
};

struct HypothesisReport {
  std::string theorem;  // "3.1" or "3.2"
  std::vector<ConditionReport> conditions;
  std::vector<AuxChoice> aux;
  Rational d_low;  // density interval (d_low, d_high]; zeros when not derivable
  Rational d_high;
  bool fully_verified = false;  // no condition Failed or Unknown
};

class AssumptionRegistry {
 public:
  struct Hit {
    std::string pair_key;  // "first-key|second-key"
    std::string citation;
  };

  // The built-in rules cover exactly the assumptions invoked in the source
  // results: pairs of cliques on >= 3 vertices, and a clique against a
  // clique-minus-matching on >= 4 vertices. File-backed entries are exact
  // canonical-key lookups and take precedence.
  static AssumptionRegistry with_builtins();

  void add_exact(const std::string& first_key, const std::string& second_key,
                 const std::string& citation);
  std::optional<Hit> lookup(const Graph& first, const Graph& second) const;
  std::size_t exact_entries() const { return exact_.size(); }

 private:
  struct Entry {
    std::string first, second, citation;
  };
  std::vector<Entry> exact_;
  bool builtins_ = false;
};

// Condition 1 of the k-partition theorem: every partition of V(g) into k
// possibly-empty parts leaves h inside some part.
ConditionReport check_partition_property(const Graph& g, const Graph& h, int k,
                                         int cap = default_partition_cap);

// Condition 2: g embeds into the complete join of k disjoint copies of h.
ConditionReport check_join_property(const Graph& g, const Graph& h, int k,
                                    std::uint64_t budget = default_subgraph_budget);

HypothesisReport check_thm31(const Graph& K, const Graph& G, const Graph& H, int k,
                             const AssumptionRegistry& registry);

struct PartiteEmbedding {
  CheckStatus status = CheckStatus::Unknown;
  std::vector<int> classes;  // class per vertex when Verified
};

// Can V(g) be assigned to k-1 classes so that each class induces at most one
// edge and at most k-2 classes induce an edge?
PartiteEmbedding check_sparse_partite_embedding(const Graph& g, int k,
                                                int cap = default_partition_cap);

HypothesisReport check_thm32(const Graph& K, const Graph& G, const AssumptionRegistry& registry);

// Is g a tree on >= 4 vertices plus an apex whose tree-neighborhood meets
// both sides of the tree's bipartition, one side in exactly one vertex?
struct TreeApexShape {
  bool valid = false;
  int apex = -1;
};
TreeApexShape recognize_tree_apex(const Graph& g);

// Is g a star on t >= 2 vertices plus a vertex adjacent to all of them?
std::optional<int> recognize_star_apex(const Graph& g);

struct RegistryUse {
  std::string pair_key;
  std::string citation;
};

struct ThresholdReport {
  bool routed = false;
  Rational exponent;        // the threshold is n^exponent; valid when routed
  std::string source;       // route that produced it
  std::string convention;   // which density-interval reading assigned k
  int k = 0;
  std::optional<HypothesisReport> hypothesis;
  std::vector<RegistryUse> assumptions;
  std::vector<std::string> no_route_reasons;
  bool fully_verified = false;
};

// Routes (K, G, d) to the matching result family, runs the hypothesis
// checker, and emits the exponent with provenance. Conditions that fail are
// reported as such; only a shape or range mismatch yields no route.
ThresholdReport threshold_exponent(const Graph& K, const Graph& G, const Rational& d,
                                   const AssumptionRegistry& registry);

}  // namespace ramsey
