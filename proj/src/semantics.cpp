#include "mqlogic/semantics.hpp"

#include "evaluator.hpp"
#include "mqlogic/errors.hpp"

namespace mqlogic {

namespace {

struct ExactDomain {
  using Value = UnitValue;

  Value constant(const UnitValue& u) const { return u; }
  Value unknown() const { throw SemanticError("the unknown atom has no value; use parametric evaluation"); }
  Value neg(const Value& a) const { return a.complement(); }
  Value cond(const Value& a, const Value& b) const { return UnitValue::clamp(1 - a.value() + b.value()); }

  Value sum(const std::vector<Value>& vals, const Value& tail) const {
    if (!tail.is_zero()) return UnitValue::one();
    Rational s = 0;
    for (const auto& v : vals) s += v.value();
    return UnitValue::clamp(s);
  }

  Value sup(const std::vector<Value>& vals, const Value& tail) const {
    Value m = tail;
    for (const auto& v : vals) {
      if (v > m) m = v;
    }
    return m;
  }
};

struct ParametricDomain {
  using Value = PiecewiseLinear;

  Value constant(const UnitValue& u) const { return PiecewiseLinear::constant(u.value()); }
  Value unknown() const { return PiecewiseLinear::identity(); }
  Value neg(const Value& a) const { return a.complement(); }
  Value cond(const Value& a, const Value& b) const { return (b - a + PiecewiseLinear::constant(1)).clamp01(); }

  Value sum(const std::vector<Value>& vals, const Value& tail) const {
    Value s = PiecewiseLinear::constant(0);
    for (const auto& v : vals) s = s + v;
    return PiecewiseLinear::max(s.clamp01(), tail.positive_indicator());
  }

  Value sup(const std::vector<Value>& vals, const Value& tail) const {
    Value m = tail;
    for (const auto& v : vals) m = PiecewiseLinear::max(m, v);
    return m;
  }
};

}  // namespace

UnitValue eval_formula(const Valuation& v, const Formula& sentence) {
  return detail::Evaluator<ExactDomain>(v, ExactDomain{}).eval(sentence);
}

InstanceValues instance_values(const Valuation& v, const Formula& body, const std::string& x) {
  auto free = free_vars(body);
  free.erase(x);
  if (!free.empty()) throw SemanticError("instance family of an open formula: " + to_string(body));
  auto in = detail::Evaluator<ExactDomain>(v, ExactDomain{}).instances(body, x);
  return InstanceValues{std::move(in.explicit_values), std::move(in.tail)};
}

namespace {

template <class Contribution>
ExtendedSum side_sum(const Valuation& v, const OmegaMultiset& side, Contribution contribution) {
  detail::Evaluator<ExactDomain> ev(v, ExactDomain{});
  ExtendedSum total;
  for (const auto& [f, m] : side.entries()) {
    const Rational c = contribution(ev.eval(f));
    if (sgn(c) == 0) continue;
    if (m.is_omega()) return ExtendedSum::infinite();
    total += ExtendedSum::finite(c * Rational(static_cast<unsigned long>(m.count())));
  }
  return total;
}

}  // namespace

ExtendedSum antecedent_deficit(const Valuation& v, const OmegaMultiset& gamma) {
  return side_sum(v, gamma, [](const UnitValue& u) { return Rational(1 - u.value()); });
}

ExtendedSum succedent_sum(const Valuation& v, const OmegaMultiset& delta) {
  return side_sum(v, delta, [](const UnitValue& u) { return u.value(); });
}

UnitValue eval_antecedent(const Valuation& v, const OmegaMultiset& gamma) {
  return antecedent_deficit(v, gamma).clamp().complement();
}

UnitValue eval_succedent(const Valuation& v, const OmegaMultiset& delta) { return succedent_sum(v, delta).clamp(); }

bool sequent_sound(const Valuation& v, const Sequent& s) {
  return eval_antecedent(v, s.antecedent) <= eval_succedent(v, s.succedent);
}

PiecewiseLinear eval_parametric(const Valuation& v, const Formula& sentence) {
  if (!v.unknown()) throw SemanticError("parametric evaluation needs an unknown atom");
  return detail::Evaluator<ParametricDomain>(v, ParametricDomain{}).eval(sentence);
}

}  // namespace mqlogic
