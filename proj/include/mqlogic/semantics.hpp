#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mqlogic/multiset.hpp"
#include "mqlogic/piecewise.hpp"
#include "mqlogic/rational.hpp"
#include "mqlogic/valuation.hpp"

namespace mqlogic {

/// Value of a sentence. Throws SemanticError for open formulas, for
/// quantification patterns the explicit/tail method cannot evaluate, and
/// UngroundedError when transparent unfolding exceeds the budget.
UnitValue eval_formula(const Valuation& v, const Formula& sentence);

/// Values of body[t/x] over the instance family. `explicit_values` covers the
/// relevant terms (closed subterms of the valuation's atoms and of the body,
/// in normal form); every other closed term gives `tail`.
struct InstanceValues {
  std::vector<std::pair<Term, UnitValue>> explicit_values;
  UnitValue tail;
};

InstanceValues instance_values(const Valuation& v, const Formula& body, const std::string& x);

/// Σ over Γ of (1 - V(A)) with multiplicities; ω copies of a positive summand
/// diverge, ω copies of zero contribute nothing.
ExtendedSum antecedent_deficit(const Valuation& v, const OmegaMultiset& gamma);
/// Σ over Δ of V(B), with the same ω convention.
ExtendedSum succedent_sum(const Valuation& v, const OmegaMultiset& delta);

/// 1 - min{1, Σ(1 - V(A))}
UnitValue eval_antecedent(const Valuation& v, const OmegaMultiset& gamma);
/// min{1, Σ V(B)}
UnitValue eval_succedent(const Valuation& v, const OmegaMultiset& delta);
bool sequent_sound(const Valuation& v, const Sequent& s);

/// Value of the sentence as a function of the valuation's unknown atom.
PiecewiseLinear eval_parametric(const Valuation& v, const Formula& sentence);

}  // namespace mqlogic
