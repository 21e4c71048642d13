#pragma once

#include <vector>

#include "mqlogic/rational.hpp"

namespace mqlogic {

/// A sequence in [0,1] given by an explicit prefix and a constant value for
/// every later index.
struct TailSeq {
  std::vector<Rational> prefix;
  Rational tail{0};

  const Rational& at(std::size_t i) const { return i < prefix.size() ? prefix[i] : tail; }
};

/// Outcome of checking the summation inequality on one triple of sequences.
///
/// Hypothesis at i:  1 - min{1, (1-γi) + (1-χi)} ≤ δi
/// Conclusion:       1 - min{1, Σ(1-γi) + (1 - min{1, Σχi})} ≤ min{1, Σδi}
struct SummationResult {
  std::vector<bool> hypothesis;  // per explicit index
  bool hypothesis_tail = true;
  bool hypothesis_all = true;
  bool conclusion = true;
  ExtendedSum gamma_deficit;  // Σ(1-γi)
  ExtendedSum chi_sum;        // Σχi
  ExtendedSum delta_sum;      // Σδi
  Rational lhs;
  Rational rhs;
};

/// Throws std::out_of_range if a value lies outside [0,1].
SummationResult check_summation_instance(const TailSeq& gamma, const TailSeq& chi, const TailSeq& delta);

}  // namespace mqlogic
