#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mqlogic/calculus.hpp"
#include "mqlogic/sampling.hpp"

namespace mqlogic {

struct FuzzConfig {
  RuleId rule = RuleId::Init;
  QuantifierMode mode = QuantifierMode::Sum;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  SamplerLimits limits;
};

/// Soundness of one rule instance under one valuation.
struct InstanceOutcome {
  bool premises_sound = true;
  bool conclusion_sound = true;
  std::vector<std::string> premises;
  std::string conclusion;

  bool violation() const { return premises_sound && !conclusion_sound; }
};

/// Values of body[t_j/x] along the instance enumeration: explicit values for
/// j < prefix.size() and `tail` for every later index.
struct InstanceSeries {
  std::vector<UnitValue> prefix;
  UnitValue tail;
};

/// Evaluates each instance sentence separately. The prefix runs up to the
/// first enumerated term deeper than every relevant term, after which all
/// instances agree.
InstanceSeries instance_series(const Valuation& v, const Formula& body, const std::string& x);

/// Premise Γ |- Δ, body[t0/x], body[t1/x], ...  and conclusion Γ |- Δ, Ex body.
InstanceOutcome exists_right_outcome(const Valuation& v, const OmegaMultiset& gamma, const OmegaMultiset& delta,
                                     const Formula& body, const std::string& x);

/// Premises body[t_j/x], Γ_j |- Δ_j for every j and conclusion
/// Ex body, ∪Γ_j |- ∪Δ_j.
InstanceOutcome exists_left_outcome(const Valuation& v, const Formula& body, const std::string& x,
                                    const IndexedFamily& gammas, const IndexedFamily& deltas);

/// The rules covered: Init, NegL, NegR, CondL, CondR, ExistsL, ExistsR.
const std::vector<RuleId>& fuzzable_rules();

/// Sample `index` of a run; `valuation_text` receives the rendered valuation.
InstanceOutcome fuzz_sample(const FuzzConfig& cfg, std::size_t index, std::string* valuation_text = nullptr);

struct FuzzViolation {
  std::size_t index;
  InstanceOutcome outcome;
  std::string valuation;
};

struct FuzzResult {
  FuzzConfig config;
  /// Samples whose premises were all sound.
  std::size_t informative = 0;
  /// Lowest-indexed violation.
  std::optional<FuzzViolation> first_violation;
};

FuzzResult fuzz_rule_serial(const FuzzConfig& cfg);
/// OpenMP over samples; identical result to the serial run.
FuzzResult fuzz_rule_parallel(const FuzzConfig& cfg);

/// MQLOGIC_SEED when set, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace mqlogic
