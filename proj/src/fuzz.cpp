#include "mqlogic/fuzz.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "mqlogic/rewrite.hpp"
#include "mqlogic/semantics.hpp"

namespace mqlogic {

namespace {

std::size_t relevant_depth(const Valuation& v, const Formula& body) {
  std::set<Term> terms = v.relevant_terms();
  collect_closed_subterms(body, terms);
  std::size_t d = 0;
  for (const auto& t : terms) d = std::max(d, t.depth());
  return d;
}

Sequent make(OmegaMultiset ant, OmegaMultiset suc) { return Sequent{std::move(ant), std::move(suc)}; }

OmegaMultiset with(OmegaMultiset m, const Formula& f) {
  m.add(f);
  return m;
}

InstanceOutcome outcome(const Valuation& v, const std::vector<Sequent>& premises, const Sequent& conclusion) {
  InstanceOutcome o;
  for (const auto& p : premises) {
    o.premises.push_back(to_string(p));
    o.premises_sound = o.premises_sound && sequent_sound(v, p);
  }
  o.conclusion = to_string(conclusion);
  o.conclusion_sound = sequent_sound(v, conclusion);
  return o;
}

IndexedFamily sample_family(Sampler& s) {
  IndexedFamily fam;
  const std::size_t k = s.below(s.limits().max_family_prefix + 1);
  for (std::size_t i = 0; i < k; ++i) fam.explicit_members.push_back(s.context());
  if (s.coin(0.5)) fam.tail = s.context();
  return fam;
}

}  // namespace

InstanceSeries instance_series(const Valuation& v, const Formula& body, const std::string& x) {
  const std::size_t d = relevant_depth(v, body);
  const Signature& sig = v.signature();
  std::size_t n = 16;
  std::vector<Term> terms;
  std::size_t cut = 0;
  for (;;) {
    terms = enumerate_closed_terms(sig, n);
    auto it = std::find_if(terms.begin(), terms.end(), [&](const Term& t) { return t.depth() > d; });
    if (it != terms.end()) {
      cut = static_cast<std::size_t>(it - terms.begin());
      break;
    }
    n *= 2;
  }
  InstanceSeries out;
  for (std::size_t j = 0; j < cut; ++j) out.prefix.push_back(eval_formula(v, substitute(body, x, terms[j])));
  out.tail = eval_formula(v, substitute(body, x, terms[cut]));
  return out;
}

InstanceOutcome exists_right_outcome(const Valuation& v, const OmegaMultiset& gamma, const OmegaMultiset& delta,
                                     const Formula& body, const std::string& x) {
  const InstanceSeries series = instance_series(v, body, x);
  ExtendedSum suc = succedent_sum(v, delta);
  for (const auto& u : series.prefix) suc += ExtendedSum::finite(u.value());
  if (!series.tail.is_zero()) suc = ExtendedSum::infinite();
  InstanceOutcome o;
  o.premises.push_back(to_string(gamma) + " |- " + to_string(delta) + (delta.empty() ? "" : ", ") + "{" +
                       to_string(body) + " | " + x + "}");
  o.premises_sound = eval_antecedent(v, gamma) <= suc.clamp();
  const Sequent c = make(gamma, with(delta, Formula::exists(x, body)));
  o.conclusion = to_string(c);
  o.conclusion_sound = sequent_sound(v, c);
  return o;
}

InstanceOutcome exists_left_outcome(const Valuation& v, const Formula& body, const std::string& x,
                                    const IndexedFamily& gammas, const IndexedFamily& deltas) {
  const InstanceSeries series = instance_series(v, body, x);
  const std::size_t k = std::max(gammas.explicit_members.size(), deltas.explicit_members.size());
  const std::size_t n = std::max(k, series.prefix.size());
  auto member = [](const IndexedFamily& f, std::size_t j) -> const OmegaMultiset& {
    return j < f.explicit_members.size() ? f.explicit_members[j] : f.tail;
  };
  InstanceOutcome o;
  const Signature& sig = v.signature();
  const std::vector<Term> terms = enumerate_closed_terms(sig, n + 1);
  // Index n stands for every index from n on.
  for (std::size_t j = 0; j <= n; ++j) {
    const Formula inst = substitute(body, x, terms[j]);
    const Sequent p = make(with(member(gammas, j), inst), member(deltas, j));
    o.premises.push_back(to_string(p) + (j == n ? "  (and every later index)" : ""));
    o.premises_sound = o.premises_sound && sequent_sound(v, p);
  }
  IndexedFamily g = gammas;
  IndexedFamily d = deltas;
  g.explicit_members.resize(k);
  d.explicit_members.resize(k);
  for (std::size_t j = gammas.explicit_members.size(); j < k; ++j) g.explicit_members[j] = gammas.tail;
  for (std::size_t j = deltas.explicit_members.size(); j < k; ++j) d.explicit_members[j] = deltas.tail;
  const Sequent c = make(with(omega_union(g), Formula::exists(x, body)), omega_union(d));
  o.conclusion = to_string(c);
  o.conclusion_sound = sequent_sound(v, c);
  return o;
}

const std::vector<RuleId>& fuzzable_rules() {
  static const std::vector<RuleId> rules{RuleId::Init,  RuleId::NegL,    RuleId::NegR,   RuleId::CondL,
                                         RuleId::CondR, RuleId::ExistsL, RuleId::ExistsR};
  return rules;
}

InstanceOutcome fuzz_sample(const FuzzConfig& cfg, std::size_t index, std::string* valuation_text) {
  Sampler s(sample_seed(cfg.seed, index), cfg.limits);
  const Valuation v = s.valuation(cfg.mode);
  if (valuation_text) *valuation_text = v.render();
  const OmegaMultiset gamma = s.context();
  const OmegaMultiset delta = s.context();
  switch (cfg.rule) {
    case RuleId::Init: {
      const Formula a = s.sentence();
      return outcome(v, {}, make(with(gamma, a), with(delta, a)));
    }
    case RuleId::NegL: {
      const Formula a = s.sentence();
      return outcome(v, {make(gamma, with(delta, a))}, make(with(gamma, Formula::neg(a)), delta));
    }
    case RuleId::NegR: {
      const Formula a = s.sentence();
      return outcome(v, {make(with(gamma, a), delta)}, make(gamma, with(delta, Formula::neg(a))));
    }
    case RuleId::CondL: {
      const Formula a = s.sentence();
      const Formula b = s.sentence();
      const OmegaMultiset gamma2 = s.context();
      const OmegaMultiset delta2 = s.context();
      return outcome(v, {make(gamma, with(delta, a)), make(with(gamma2, b), delta2)},
                     make(with(multiset_union(gamma, gamma2), Formula::cond(a, b)), multiset_union(delta, delta2)));
    }
    case RuleId::CondR: {
      const Formula a = s.sentence();
      const Formula b = s.sentence();
      return outcome(v, {make(with(gamma, a), with(delta, b))}, make(gamma, with(delta, Formula::cond(a, b))));
    }
    case RuleId::ExistsR: return exists_right_outcome(v, gamma, delta, s.body("x"), "x");
    case RuleId::ExistsL: {
      const Formula body = s.body("x");
      const IndexedFamily gammas = sample_family(s);
      const IndexedFamily deltas = sample_family(s);
      return exists_left_outcome(v, body, "x", gammas, deltas);
    }
    default: throw std::invalid_argument("no fuzzer for rule " + to_string(cfg.rule));
  }
}

namespace {

FuzzResult finish(const FuzzConfig& cfg, std::size_t informative, std::size_t first) {
  FuzzResult r;
  r.config = cfg;
  r.informative = informative;
  if (first < cfg.samples) {
    FuzzViolation v{first, {}, {}};
    v.outcome = fuzz_sample(cfg, first, &v.valuation);
    r.first_violation = std::move(v);
  }
  return r;
}

}  // namespace

FuzzResult fuzz_rule_serial(const FuzzConfig& cfg) {
  std::size_t informative = 0;
  std::size_t first = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const InstanceOutcome o = fuzz_sample(cfg, i);
    if (o.premises_sound) ++informative;
    if (o.violation() && i < first) first = i;
  }
  return finish(cfg, informative, first);
}

FuzzResult fuzz_rule_parallel(const FuzzConfig& cfg) {
  std::size_t informative = 0;
  std::size_t first = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;
  const auto n = static_cast<long long>(cfg.samples);
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : informative) reduction(min : first)
  for (long long i = 0; i < n; ++i) {
    try {
      const InstanceOutcome o = fuzz_sample(cfg, static_cast<std::size_t>(i));
      if (o.premises_sound) ++informative;
      if (o.violation()) first = std::min(first, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return finish(cfg, informative, first);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("MQLOGIC_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("MQLOGIC_SEED is not an unsigned integer: ") + s);
  }
}

}  // namespace mqlogic
