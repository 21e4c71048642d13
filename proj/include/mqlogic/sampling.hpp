#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mqlogic/summation.hpp"
#include "mqlogic/multiset.hpp"
#include "mqlogic/valuation.hpp"

namespace mqlogic {

/// Constants a b c, function f/1, predicates P/1 Q/1 R/2 S/0. No names, no
/// coding equations.
std::shared_ptr<const Signature> fuzz_signature();

/// Seed for sample `index` of a run, so shards can be drawn in any order.
std::uint64_t sample_seed(std::uint64_t run_seed, std::uint64_t index);

struct SamplerLimits {
  unsigned max_denominator = 60;
  std::size_t max_context = 3;
  std::size_t max_family_prefix = 4;
  std::size_t max_depth = 3;
};

/// Draws random values, sentences, valuations and contexts over
/// fuzz_signature(). Closed terms never nest f twice, which keeps every
/// term of depth two or more outside the relevant set of a valuation.
class Sampler {
 public:
  Sampler(std::uint64_t seed, SamplerLimits limits = {});

  std::mt19937_64& rng() { return rng_; }
  const SamplerLimits& limits() const { return limits_; }
  bool coin(double p);
  std::size_t below(std::size_t n);

  /// p/q with q uniform in 1..max_denominator and p uniform in 0..q.
  Rational unit_rational();
  UnitValue unit_value() { return UnitValue(unit_rational()); }
  /// A value >= lo on the same grid (rejection sampling, 1 always qualifies).
  Rational unit_rational_at_least(const Rational& lo);

  Term closed_term();
  /// Sentence of depth <= max_depth.
  Formula sentence();
  /// Formula whose only free variable is (possibly) x.
  Formula body(const std::string& x);
  Formula formula(std::size_t depth, std::vector<std::string>& scope);
  /// When off, generated formulas contain no quantifiers.
  void set_quantifiers(bool on) { quantifiers_ = on; }

  /// Atom values over a pool of closed atoms plus random defaults, half of
  /// which are exactly 0.
  Valuation valuation(QuantifierMode mode);
  /// Up to max_context sentences; each entry is ω with probability 1/10.
  OmegaMultiset context();

  /// Prefix of length <= 50 and tail; `tail_positive` selects the sign of the
  /// tail (for γ the sign of 1 - tail).
  TailSeq tail_seq(bool tail_positive, bool complement);

 private:
  Term term(const std::vector<std::string>& scope);
  Formula atom(const std::vector<std::string>& scope);

  std::mt19937_64 rng_;
  SamplerLimits limits_;
  std::shared_ptr<const Signature> sig_;
  std::size_t fresh_ = 0;
  bool quantifiers_ = true;
};

struct SummationSample {
  TailSeq gamma;
  TailSeq chi;
  TailSeq delta;
};

/// A triple satisfying the per-index hypothesis, with γ's deficit tail and
/// χ's tail positive or zero according to the two low bits of `tail_case`.
SummationSample sample_summation_triple(Sampler& s, unsigned tail_case);

}  // namespace mqlogic
