#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/arrows.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// Edge probability: an exact rational, or coeff * n^expo evaluated per n.
// Either way the sampler works from a dyadic inclusion threshold at 2^-53
// granularity (nearest, ties up; the power form goes through long double).
struct PModel {
  static PModel exact(const Rational& value);
  static PModel power(const Rational& coeff, const Rational& expo);
  // "p/q", "c*n^x" or "n^x"
  static PModel parse(const std::string& text);

  bool exponent_form = false;
  Rational value;
  Rational coeff;
  Rational expo;

  std::uint64_t threshold(int n) const;
  Rational effective(int n) const;  // the dyadic rational actually sampled
  std::string str() const;
};

// Each of the C(n,2) edges independently present with the model probability.
// Uniforms are addressed per (seed, n, edge index), so two calls with the
// same key but different p give nested graphs whenever the thresholds are
// ordered.
Graph sample_gnp(int n, const PModel& p, std::uint64_t seed);

// Edge union on a shared vertex set.
Graph perturb(const Graph& base, const Graph& random_part);

enum class WitnessStatus { Built, NoneFound, Unknown };
const char* to_string(WitnessStatus s);

struct ColoredWitness {
  Graph host;
  EdgeColoring coloring;
  std::string provenance;
  bool verified = false;
  std::string failure;  // mono-copy found by the re-check, empty when verified
};

struct WitnessOutcome {
  WitnessStatus status = WitnessStatus::Unknown;
  std::optional<ColoredWitness> witness;
  std::string note;
};

// Blue complete k-partite base plus a sample; the leftover sampled edges
// inside parts get a searched coloring with no red K and no blue H, then the
// combined coloring is independently re-checked against (K, G).
WitnessOutcome lower_bound_witness_31(int n, int k, const Graph& K, const Graph& H,
                                      const Graph& G, const PModel& p, std::uint64_t seed,
                                      const ArrowOptions& opts = {});

// Blue complete (k-1)-partite base plus a sample; every leftover sampled edge
// is red. Valid iff the re-check finds no red K and no blue G.
WitnessOutcome lower_bound_witness_32(int n, int k, const Graph& K, const Graph& G,
                                      const PModel& p, std::uint64_t seed,
                                      std::uint64_t budget = default_subgraph_budget);

struct SimConfig {
  std::string base_spec;  // bare "n" size tokens take each cell's n
  std::string red_spec;
  std::string blue_spec;
  std::vector<int> ns;
  std::vector<PModel> ps;
  int trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 200'000'000;
};

struct CellResult {
  int n = 0;
  std::string p_text;
  Rational p_effective;
  int trials = 0;
  int ramsey = 0;
  int notramsey = 0;
  int unknown = 0;
  std::vector<ArrowVerdict> verdicts;  // per trial, in trial order
};

struct SimResult {
  std::vector<CellResult> cells;  // config order: ns outer, ps inner
  std::string note;               // finite-scale disclaimer, part of every report
};

// Per cell: sample, perturb, decide with the arrow engine. Within one
// (n, trial) the same edge uniforms serve the whole p grid, so the sampled
// graph, and with it the Ramsey indicator, is monotone in the threshold.
SimResult run_experiment(const SimConfig& cfg);

struct Wilson {
  double low = 0;
  double high = 1;
};
Wilson wilson95(int successes, int total);

// Replaces standalone "n" size tokens in a spec string; g6 payloads are left
// alone.
std::string substitute_n(const std::string& spec_text, int n);

}  // namespace ramsey
