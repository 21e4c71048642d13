#include "mqlogic/properties.hpp"

#include "mqlogic/fuzz.hpp"
#include "mqlogic/sampling.hpp"
#include "mqlogic/semantics.hpp"

namespace mqlogic {

namespace {

QuantifierMode any_mode(Sampler& s) { return s.coin(0.5) ? QuantifierMode::Sum : QuantifierMode::Sup; }

template <class Case>
PropertyResult run(const std::string& name, std::size_t n, std::uint64_t seed, Case check) {
  PropertyResult r{name, n, 0, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Sampler s(sample_seed(seed, i));
    std::string problem = check(s);
    if (!problem.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + problem;
    }
  }
  return r;
}

}  // namespace

PropertyResult property_range(std::size_t n, std::uint64_t seed) {
  return run("range", n, seed, [](Sampler& s) -> std::string {
    const Valuation v = s.valuation(any_mode(s));
    const Formula a = s.sentence();
    const Rational q = eval_formula(v, a).value();
    if (sgn(q) < 0 || q > 1) return to_string(a) + " = " + to_string(q);
    return {};
  });
}

PropertyResult property_involution(std::size_t n, std::uint64_t seed) {
  return run("involution", n, seed, [](Sampler& s) -> std::string {
    const Valuation v = s.valuation(any_mode(s));
    const Formula a = s.sentence();
    const UnitValue x = eval_formula(v, a);
    const UnitValue y = eval_formula(v, Formula::neg(Formula::neg(a)));
    if (x != y) return to_string(a) + ": " + to_string(x.value()) + " vs " + to_string(y.value());
    return {};
  });
}

PropertyResult property_residuation(std::size_t n, std::uint64_t seed) {
  return run("residuation", n, seed, [](Sampler& s) -> std::string {
    const Valuation v = s.valuation(any_mode(s));
    const Formula a = s.sentence();
    const Formula b = s.sentence();
    const bool one = eval_formula(v, Formula::cond(a, b)).is_one();
    const bool le = eval_formula(v, a) <= eval_formula(v, b);
    if (one != le) return to_string(Formula::cond(a, b));
    return {};
  });
}

PropertyResult property_sum_dominates_sup(std::size_t n, std::uint64_t seed) {
  return run("sum-vs-sup", n, seed, [](Sampler& s) -> std::string {
    s.set_quantifiers(false);
    Valuation v = s.valuation(QuantifierMode::Sum);
    const Formula body = s.body("x");
    const Formula ex = Formula::exists("x", body);
    const UnitValue sum = eval_formula(v, ex);
    v.set_mode(QuantifierMode::Sup);
    const UnitValue sup = eval_formula(v, ex);
    if (sum < sup) return to_string(ex) + ": sum " + to_string(sum.value()) + " < sup " + to_string(sup.value());
    const InstanceSeries series = instance_series(v, body, "x");
    std::size_t positive = 0;
    for (const auto& u : series.prefix) positive += u.is_zero() ? 0 : 1;
    if (positive <= 1 && series.tail.is_zero() && sum != sup) {
      return to_string(ex) + ": one positive instance but sum " + to_string(sum.value()) + " != sup " +
             to_string(sup.value());
    }
    return {};
  });
}

PropertyResult property_tail(std::size_t n, std::uint64_t seed) {
  return run("tail", n, seed, [](Sampler& s) -> std::string {
    const Valuation v = s.valuation(any_mode(s));
    const Formula body = s.body("x");
    const InstanceValues iv = instance_values(v, body, "x");
    std::set<Term> relevant = v.relevant_terms();
    collect_closed_subterms(body, relevant);
    static const char* names[] = {"a", "b", "c"};
    for (int k = 0; k < 20; ++k) {
      Term t = Term::constant(names[s.below(3)]);
      const std::size_t wraps = 2 + s.below(5);
      for (std::size_t w = 0; w < wraps; ++w) t = Term::app("f", {t});
      if (relevant.count(t)) continue;
      const UnitValue got = eval_formula(v, substitute(body, "x", t));
      if (got != iv.tail) {
        return to_string(body) + " at " + to_string(t) + ": " + to_string(got.value()) + " vs tail " +
               to_string(iv.tail.value());
      }
    }
    return {};
  });
}

std::vector<PropertyResult> semantic_property_suite(std::size_t n, std::uint64_t seed) {
  return {property_range(n, seed), property_involution(n, seed + 1), property_residuation(n, seed + 2),
          property_sum_dominates_sup(n, seed + 3), property_tail(n, seed + 4)};
}

}  // namespace mqlogic
