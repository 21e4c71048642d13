#include "mqlogic/summation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqlogic {

namespace {

void check_range(const TailSeq& s) {
  auto bad = [](const Rational& q) { return sgn(q) < 0 || q > 1; };
  if (bad(s.tail) || std::any_of(s.prefix.begin(), s.prefix.end(), bad)) {
    throw std::out_of_range("sequence value outside [0,1]");
  }
}

bool hypothesis_at(const Rational& g, const Rational& c, const Rational& d) {
  const Rational inner = min(Rational(1), (1 - g) + (1 - c));
  return 1 - inner <= d;
}

// Σ f(s_i) over all indices, where the tail repeats forever.
template <class F>
ExtendedSum series(const TailSeq& s, std::size_t n, F f) {
  if (sgn(f(s.tail)) > 0) return ExtendedSum::infinite();
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) total += f(s.at(i));
  return ExtendedSum::finite(total);
}

}  // namespace

SummationResult check_summation_instance(const TailSeq& gamma, const TailSeq& chi, const TailSeq& delta) {
  check_range(gamma);
  check_range(chi);
  check_range(delta);
  const std::size_t n = std::max({gamma.prefix.size(), chi.prefix.size(), delta.prefix.size()});

  SummationResult r;
  for (std::size_t i = 0; i < n; ++i) {
    const bool ok = hypothesis_at(gamma.at(i), chi.at(i), delta.at(i));
    r.hypothesis.push_back(ok);
    r.hypothesis_all = r.hypothesis_all && ok;
  }
  r.hypothesis_tail = hypothesis_at(gamma.tail, chi.tail, delta.tail);
  r.hypothesis_all = r.hypothesis_all && r.hypothesis_tail;

  r.gamma_deficit = series(gamma, n, [](const Rational& q) { return Rational(1 - q); });
  r.chi_sum = series(chi, n, [](const Rational& q) { return q; });
  r.delta_sum = series(delta, n, [](const Rational& q) { return q; });

  const UnitValue chi_clamped = r.chi_sum.clamp();
  ExtendedSum inner = r.gamma_deficit + ExtendedSum::finite(1 - chi_clamped.value());
  r.lhs = 1 - inner.clamp().value();
  r.rhs = r.delta_sum.clamp().value();
  r.conclusion = r.lhs <= r.rhs;
  return r;
}

}  // namespace mqlogic
