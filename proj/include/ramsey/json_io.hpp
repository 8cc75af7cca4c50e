#pragma once

#include <string>

#include "json.hpp"
#include "ramsey/arrows.hpp"
#include "ramsey/chromatic.hpp"
#include "ramsey/density.hpp"
#include "ramsey/perturb.hpp"
#include "ramsey/verifier.hpp"

namespace ramsey {

// Every document carries "schema": "<name>/1"; the named schema files live in
// schemas/. Rationals are always "p/q" strings.

nlohmann::json density_json(const Graph& g, const DensityReport& m2r, const DensityReport& mr,
                            const Rational& d2, const Rational& ev);
nlohmann::json asym_json(const Graph& h1, const Graph& h2, const DensityReport& r);
nlohmann::json balance_json(const Graph& g, bool balanced, bool strictly_2_balanced);

// Certificate layout shared by arrow results and colored witnesses: host as
// graph6 plus the red edge list.
nlohmann::json certificate_json(const Graph& host, const std::vector<std::uint8_t>& red_bits);

nlohmann::json arrow_json(const Graph& host, const ArrowResult& r);
nlohmann::json global_json(const Graph& host, const Rational& mu, const GlobalArrowResult& r);
nlohmann::json chromatic_json(const Graph& g, const ChromaticResult& r);

nlohmann::json hypothesis_json(const HypothesisReport& r);
nlohmann::json threshold_json(const ThresholdReport& r);
nlohmann::json witness_json(const WitnessOutcome& o);

std::string sim_csv(const SimResult& r);
nlohmann::json sim_json(const SimResult& r);

// Builtin rules plus the exact entries of the JSON file at path (empty path =
// builtins only). File layout: {"entries": [{"first", "second", "citation"}]}
// with graph-spec strings.
AssumptionRegistry load_registry(const std::string& path);

}  // namespace ramsey
