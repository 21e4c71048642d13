#include "mqlogic/sampling.hpp"

#include <algorithm>

namespace mqlogic {

std::shared_ptr<const Signature> fuzz_signature() {
  static const std::shared_ptr<const Signature> sig = [] {
    auto s = std::make_shared<Signature>();
    for (const char* c : {"a", "b", "c"}) s->add_constant(c);
    s->add_function("f", 1);
    s->add_predicate("P", 1);
    s->add_predicate("Q", 1);
    s->add_predicate("R", 2);
    s->add_predicate("S", 0);
    return s;
  }();
  return sig;
}

std::uint64_t sample_seed(std::uint64_t run_seed, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = run_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Sampler::Sampler(std::uint64_t seed, SamplerLimits limits) : rng_(seed), limits_(limits), sig_(fuzz_signature()) {}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t Sampler::below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

Rational Sampler::unit_rational() {
  const unsigned long q = std::uniform_int_distribution<unsigned long>(1, limits_.max_denominator)(rng_);
  const unsigned long p = std::uniform_int_distribution<unsigned long>(0, q)(rng_);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational Sampler::unit_rational_at_least(const Rational& lo) {
  for (int tries = 0; tries < 64; ++tries) {
    Rational r = unit_rational();
    if (r >= lo) return r;
  }
  return Rational(1);
}

Term Sampler::closed_term() {
  static const char* names[] = {"a", "b", "c"};
  Term t = Term::constant(names[below(3)]);
  return coin(0.3) ? Term::app("f", {t}) : t;
}

Term Sampler::term(const std::vector<std::string>& scope) {
  static const char* names[] = {"a", "b", "c"};
  Term t = (!scope.empty() && coin(0.6)) ? Term::var(scope[below(scope.size())]) : Term::constant(names[below(3)]);
  return coin(0.25) ? Term::app("f", {t}) : t;
}

Formula Sampler::atom(const std::vector<std::string>& scope) {
  switch (below(4)) {
    case 0: return Formula::atom("P", {term(scope)});
    case 1: return Formula::atom("Q", {term(scope)});
    case 2: return Formula::atom("R", {term(scope), term(scope)});
    default: return Formula::atom("S", {});
  }
}

Formula Sampler::formula(std::size_t depth, std::vector<std::string>& scope) {
  if (depth == 0 || coin(0.3)) return atom(scope);
  const std::size_t pick = below(quantifiers_ ? 20 : 13);
  if (pick < 6) return Formula::neg(formula(depth - 1, scope));
  if (pick < 13) {
    Formula a = formula(depth - 1, scope);
    return Formula::cond(a, formula(depth - 1, scope));
  }
  const std::string v = "y" + std::to_string(fresh_++);
  scope.push_back(v);
  Formula b = formula(depth - 1, scope);
  scope.pop_back();
  return Formula::exists(v, b);
}

Formula Sampler::sentence() {
  std::vector<std::string> scope;
  return formula(limits_.max_depth, scope);
}

Formula Sampler::body(const std::string& x) {
  std::vector<std::string> scope{x};
  return formula(limits_.max_depth, scope);
}

Valuation Sampler::valuation(QuantifierMode mode) {
  Valuation v(sig_, mode);
  for (const char* p : {"P", "Q", "R", "S"}) {
    v.set_default(p, coin(0.5) ? UnitValue::zero() : unit_value());
  }
  const std::size_t n = below(2 * limits_.max_context + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Formula a = Formula::atom("S", {});
    switch (below(4)) {
      case 0: a = Formula::atom("P", {closed_term()}); break;
      case 1: a = Formula::atom("Q", {closed_term()}); break;
      case 2: a = Formula::atom("R", {closed_term(), closed_term()}); break;
      default: break;
    }
    v.set_atom(a, unit_value());
  }
  return v;
}

OmegaMultiset Sampler::context() {
  OmegaMultiset m;
  const std::size_t n = below(limits_.max_context + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Multiplicity mult = coin(0.1) ? Multiplicity::omega() : Multiplicity::finite(coin(0.2) ? 2 : 1);
    m.add(sentence(), mult);
  }
  return m;
}

TailSeq Sampler::tail_seq(bool tail_positive, bool complement) {
  TailSeq s;
  const std::size_t n = below(51);
  for (std::size_t i = 0; i < n; ++i) s.prefix.push_back(unit_rational());
  Rational t = 0;
  while (tail_positive && sgn(t) == 0) t = unit_rational();
  s.tail = complement ? Rational(1 - t) : t;
  return s;
}

SummationSample sample_summation_triple(Sampler& s, unsigned tail_case) {
  SummationSample out;
  out.gamma = s.tail_seq((tail_case & 1u) != 0, true);
  out.chi = s.tail_seq((tail_case & 2u) != 0, false);
  const std::size_t n = std::max(out.gamma.prefix.size(), out.chi.prefix.size());
  auto required = [](const Rational& g, const Rational& c) {
    Rational r = g + c - 1;
    return sgn(r) < 0 ? Rational(0) : r;
  };
  for (std::size_t i = 0; i < n; ++i) {
    out.delta.prefix.push_back(s.unit_rational_at_least(required(out.gamma.at(i), out.chi.at(i))));
  }
  const Rational need = required(out.gamma.tail, out.chi.tail);
  out.delta.tail = (sgn(need) == 0 && s.coin(0.5)) ? Rational(0) : s.unit_rational_at_least(need);
  return out;
}

}  // namespace mqlogic
