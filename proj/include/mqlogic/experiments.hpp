#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mqlogic/derivation_json.hpp"
#include "mqlogic/piecewise.hpp"

namespace mqlogic {

struct ExperimentResult {
  std::string id;
  bool pass = false;
  Json evidence;
  std::uint64_t seed = 0;
  double runtime_ms = 0;
};

/// thm1, lemma1, thm2-fuzz, prop1, prop2, prop3, vacuous-compare.
const std::vector<std::string>& experiment_ids();

struct ExperimentOptions {
  std::uint64_t seed = 20240601;
  std::size_t samples = 10000;
  /// Family spot-check depth for the derivation experiments.
  std::size_t depth = 8;
};

/// Throws std::invalid_argument for an unknown id.
ExperimentResult run_experiment(const std::string& id, const ExperimentOptions& opts = {});

Json result_json(const ExperimentResult& r);
/// {"pieces": [{"lo","hi","closedLo","closedHi","a","b"}...]}
Json piecewise_json(const PiecewiseLinear& f);
Json solutions_json(const std::vector<SolutionInterval>& s);

}  // namespace mqlogic
