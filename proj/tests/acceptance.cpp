// One PASS/FAIL line per acceptance criterion, each under its time limit.
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "mqlogic/calculus.hpp"
#include "mqlogic/constructions.hpp"
#include "mqlogic/fuzz.hpp"
#include "mqlogic/summation.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/properties.hpp"
#include "mqlogic/sampling.hpp"
#include "mqlogic/semantics.hpp"

using namespace mqlogic;
using Oracle = boost::multiprecision::cpp_rational;

namespace {

using Clock = std::chrono::steady_clock;

Oracle oracle(const Rational& q) { return Oracle(q.get_str()); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

bool run(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs << " s, limit " << limit_s << " s)";
  if (!in_time) line << " over time limit;";
  if (!o.detail.empty()) line << " " << o.detail;
  std::cout << line.str() << std::endl;
  return pass;
}

Outcome sup_counterexample() {
  const auto sig = std::make_shared<Signature>(Signature::parse("const a b\npred P/1 G/1 D/1\n"));
  Valuation v(sig, QuantifierMode::Sup);
  const Formula g = parse_formula("G(a)", *sig);
  const Formula d = parse_formula("D(a)", *sig);
  v.set_atom(g, UnitValue::one());
  v.set_atom(d, UnitValue::zero());
  v.set_default("P", UnitValue(Rational(1, 2)));
  ParseOptions o;
  o.allow_free_variables = true;
  const Formula body = parse_formula("P(x)", *sig, o);
  const OmegaMultiset gamma{{g, Multiplicity::finite(1)}};
  const OmegaMultiset delta{{d, Multiplicity::finite(1)}};

  const auto iv = instance_values(v, body, "x");
  bool halves = iv.tail == UnitValue(Rational(1, 2));
  for (const auto& [t, u] : iv.explicit_values) halves = halves && u == UnitValue(Rational(1, 2));
  const InstanceOutcome out = exists_right_outcome(v, gamma, delta, body, "x");
  // conclusion by hand: 1 <= min{1, 0 + 1/2} fails
  OmegaMultiset conc = delta;
  conc.add(Formula::exists("x", body));
  const bool exact = eval_antecedent(v, gamma) == UnitValue::one() &&
                     eval_succedent(v, conc) == UnitValue(Rational(1, 2));
  Outcome res;
  res.ok = halves && exact && out.premises_sound && !out.conclusion_sound;
  res.detail = "premise sound=" + std::string(out.premises_sound ? "yes" : "no") +
               ", conclusion sound=" + (out.conclusion_sound ? "yes" : "no");
  return res;
}

Outcome fuzz_rule(RuleId r, std::uint64_t seed) {
  FuzzConfig c;
  c.rule = r;
  c.mode = QuantifierMode::Sum;
  c.samples = 10000;
  c.seed = seed;
  const FuzzResult res = fuzz_rule_parallel(c);
  Outcome o;
  o.ok = !res.first_violation;
  o.detail = "informative=" + std::to_string(res.informative);
  if (res.first_violation) o.detail += ", violation at sample " + std::to_string(res.first_violation->index);
  return o;
}

// Σ with a constant tail; nullopt when the tail term is positive.
std::optional<Oracle> series(const TailSeq& s, bool complement) {
  Oracle total = 0;
  for (const auto& q : s.prefix) total += complement ? 1 - oracle(q) : oracle(q);
  const Oracle tail = complement ? 1 - oracle(s.tail) : oracle(s.tail);
  if (tail > 0) return std::nullopt;
  return total;
}

bool matches(const ExtendedSum& e, const std::optional<Oracle>& o) {
  if (!o) return e.is_infinite();
  return !e.is_infinite() && oracle(e.finite_value()) == *o;
}

bool on_grid(const TailSeq& s) {
  if (s.prefix.size() > 50) return false;
  auto ok = [](const Rational& q) { return q.get_den() <= 60 && q >= 0 && q <= 1; };
  return ok(s.tail) && std::all_of(s.prefix.begin(), s.prefix.end(), ok);
}

Outcome summation(std::uint64_t seed) {
  std::size_t bad = 0, convergent = 0, oracle_bad = 0, off_grid = 0;
  std::array<std::size_t, 4> cases{};
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Sampler s(sample_seed(seed, i));
    const unsigned tc = static_cast<unsigned>(i & 3u);
    const SummationSample t = sample_summation_triple(s, tc);
    if (!on_grid(t.gamma) || !on_grid(t.chi) || !on_grid(t.delta)) ++off_grid;
    const SummationResult r = check_summation_instance(t.gamma, t.chi, t.delta);
    const bool gamma_pos = t.gamma.tail < 1;
    const bool chi_pos = t.chi.tail > 0;
    ++cases[(gamma_pos ? 1 : 0) | (chi_pos ? 2 : 0)];
    if (!r.hypothesis_all || !r.conclusion) ++bad;
    const auto d = series(t.gamma, true);
    const auto x = series(t.chi, false);
    const auto y = series(t.delta, false);
    if (d && x && y) {
      ++convergent;
      if (!matches(r.gamma_deficit, d) || !matches(r.chi_sum, x) || !matches(r.delta_sum, y)) ++oracle_bad;
    }
  }
  Outcome o;
  const bool all_cases = std::all_of(cases.begin(), cases.end(), [](std::size_t c) { return c > 0; });
  o.ok = bad == 0 && oracle_bad == 0 && off_grid == 0 && all_cases && convergent > 0;
  o.detail = "failures=" + std::to_string(bad) + ", convergent=" + std::to_string(convergent) +
             ", oracle mismatches=" + std::to_string(oracle_bad) + ", tail cases=" + std::to_string(cases[0]) + "/" +
             std::to_string(cases[1]) + "/" + std::to_string(cases[2]) + "/" + std::to_string(cases[3]);
  return o;
}

Outcome omega_liar() {
  auto sig = omega_liar_signature();
  const auto built = omega_liar_derivation(*sig, 8);
  Outcome o;
  std::size_t certified = 0;
  for (std::size_t i = 0; i < built.witnesses.size(); ++i) {
    const auto r = check_derivation(built.witnesses[i], VacuousPolicy::Multiplicative, 8, *sig);
    const SchematicSequent want = parse_schematic_sequent("T(fm(" + std::to_string(i) + ", m)) |-", *sig);
    if (r.ok && r.nodes.front().sequent == want) ++certified;
  }
  const auto main = check_derivation(built.main, VacuousPolicy::Multiplicative, 8, *sig);
  const bool final_ok = main.ok && main.nodes.front().sequent == parse_schematic_sequent("|- ~Ex x T(fm(x,m))", *sig);
  o.ok = built.witnesses.size() == 9 && certified == 9 && final_ok;
  o.detail = "witnesses certified=" + std::to_string(certified) + "/9, final sequent " + (final_ok ? "ok" : "not ok");
  return o;
}

Outcome liar_parametric() {
  auto sig = std::make_shared<Signature>(Signature::parse("const l\n"));
  Valuation v(sig);
  v.set_unknown(parse_formula("T(l)", *sig));
  const PiecewiseLinear f = eval_parametric(v, parse_formula("~Ex x T(l)", *sig));
  const std::vector<Piece> want{Piece{0, 0, true, true, Affine{0, 1}}, Piece{0, 1, false, true, Affine{0, 0}}};
  Outcome o;
  o.ok = f.pieces() == want && f.fixed_points().empty();
  o.detail = "pieces=" + std::to_string(f.pieces().size()) + ", fixed points=" + std::to_string(f.fixed_points().size());
  return o;
}

Outcome vacuous_liar() {
  auto sig = vacuous_liar_signature();
  const Derivation d = vacuous_liar_derivation();
  const auto mult = check_derivation(d, VacuousPolicy::Multiplicative, 4, *sig);
  const bool mult_ok = mult.ok && mult.nodes.front().sequent == parse_schematic_sequent("|- ~Ex x T(l)", *sig);
  const auto add = check_derivation(d, VacuousPolicy::Additive, 4, *sig);
  const bool add_fails_at_r = !add.ok && add.nodes.back().rule == "ExistsRw";
  const Verdict single = check_instance(RuleId::ExistsL, {parse_schematic_sequent("T(l) |- T(l)", *sig)}, nullptr,
                                        parse_schematic_sequent("Ex x T(l) |- T(l)", *sig), VacuousPolicy::Additive, *sig);
  Outcome o;
  o.ok = mult_ok && add_fails_at_r && single.ok();
  o.detail = std::string("multiplicative ") + (mult_ok ? "ok" : "not ok") + ", additive fails at " +
             (add.ok ? "(none)" : add.failed_path + " " + add.nodes.back().rule) + ", Ex x T(l) |- T(l) additive " +
             (single.ok() ? "passes" : "fails");
  return o;
}

Outcome properties(std::uint64_t seed) {
  Outcome o;
  for (const auto& p : semantic_property_suite(10000, seed)) {
    o.ok = o.ok && p.ok() && p.cases == 10000;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += p.name + " " + std::to_string(p.cases - p.failures) + "/" + std::to_string(p.cases);
    if (!p.ok()) o.detail += " (" + p.first_failure + ")";
  }
  return o;
}

}  // namespace

int main() {
  const std::uint64_t seed = seed_from_env(20240601);
  std::cout << "seed " << seed << std::endl;
  bool all = true;
  all &= run(1, "sup clause: ExistsRw premise sound, conclusion unsound", 1, sup_counterexample);
  bool fuzz_ok = true;
  for (RuleId r : fuzzable_rules()) {
    fuzz_ok &= run(2, "sum clause fuzz " + to_string(r) + " (10000 samples)", 60, [&] { return fuzz_rule(r, seed); });
  }
  all &= fuzz_ok;
  all &= run(3, "summation inequality on 10000 triples", 30, [&] { return summation(seed); });
  all &= run(4, "omega-liar derivation, K=8", 10, omega_liar);
  all &= run(5, "liar value as a function of V(T(l))", 1, liar_parametric);
  all &= run(6, "vacuous liar under both policies", 1, vacuous_liar);
  all &= run(7, "semantic clause properties, 10000 cases each", 120, [&] { return properties(seed); });
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? 0 : 1;
}
