#include "mqlogic/experiments.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "mqlogic/constructions.hpp"
#include "mqlogic/fuzz.hpp"
#include "mqlogic/summation.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/rewrite.hpp"
#include "mqlogic/sampling.hpp"
#include "mqlogic/semantics.hpp"

namespace mqlogic {

namespace {

Json outcome_json(const InstanceOutcome& o) {
  Json j;
  j["premises"] = o.premises;
  j["conclusion"] = o.conclusion;
  j["premisesSound"] = o.premises_sound;
  j["conclusionSound"] = o.conclusion_sound;
  return j;
}

Json report_summary(const CheckReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["policy"] = to_string(r.policy);
  j["depth"] = r.depth;
  j["bounded"] = r.bounded;
  j["nodes"] = r.nodes.size();
  j["spotChecks"] = r.family_spot_checks.size();
  if (!r.ok) {
    j["failedPath"] = r.failed_path;
    j["failedRule"] = r.nodes.back().rule;
    j["verdict"] = to_string(r.nodes.back().verdict.kind);
    j["message"] = r.nodes.back().verdict.message;
  }
  if (!r.nodes.empty()) j["conclusion"] = to_string(r.nodes.front().sequent);
  return j;
}

bool run_sup_counterexample(const ExperimentOptions& opts, Json& ev) {
  Valuation v(fuzz_signature(), QuantifierMode::Sup);
  v.set_default("P", UnitValue(Rational(1, 2)));
  v.set_atom(Formula::atom("S", {}), UnitValue::one());
  OmegaMultiset gamma{{Formula::atom("S", {}), Multiplicity::finite(1)}};
  OmegaMultiset delta{{Formula::atom("Q", {Term::constant("a")}), Multiplicity::finite(1)}};
  const Formula body = Formula::atom("P", {Term::var("x")});

  const InstanceOutcome sup = exists_right_outcome(v, gamma, delta, body, "x");
  Valuation vs = v;
  vs.set_mode(QuantifierMode::Sum);
  const InstanceOutcome sum = exists_right_outcome(vs, gamma, delta, body, "x");
  ev["valuation"] = v.render();
  ev["sup"] = outcome_json(sup);
  ev["sum"] = outcome_json(sum);
  ev["existsValueSup"] = to_string(eval_formula(v, Formula::exists("x", body)));
  ev["existsValueSum"] = to_string(eval_formula(vs, Formula::exists("x", body)));

  FuzzConfig cfg;
  cfg.rule = RuleId::ExistsR;
  cfg.mode = QuantifierMode::Sup;
  cfg.samples = opts.samples;
  cfg.seed = opts.seed;
  const FuzzResult r = fuzz_rule_parallel(cfg);
  ev["randomSearch"] = {{"samples", cfg.samples}, {"found", r.first_violation.has_value()}};
  if (r.first_violation) ev["randomSearch"]["index"] = r.first_violation->index;
  return sup.violation() && !sum.violation() && r.first_violation.has_value();
}

bool run_summation(const ExperimentOptions& opts, Json& ev) {
  std::size_t hyp_failures = 0;
  std::size_t failures = 0;
  std::size_t per_case[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Sampler s(sample_seed(opts.seed, i));
    const unsigned tail_case = static_cast<unsigned>(i % 4);
    const SummationSample t = sample_summation_triple(s, tail_case);
    const SummationResult r = check_summation_instance(t.gamma, t.chi, t.delta);
    if (!r.hypothesis_all) ++hyp_failures;
    if (r.hypothesis_all && !r.conclusion) {
      if (failures++ == 0) ev["firstFailure"] = i;
    }
    ++per_case[tail_case];
  }
  ev["samples"] = opts.samples;
  ev["hypothesisFailures"] = hyp_failures;
  ev["conclusionFailures"] = failures;
  ev["tailCases"] = {{"gammaDeficit0_chi0", per_case[0]},
                     {"gammaDeficitPos_chi0", per_case[1]},
                     {"gammaDeficit0_chiPos", per_case[2]},
                     {"gammaDeficitPos_chiPos", per_case[3]}};
  return failures == 0 && hyp_failures == 0;
}

bool run_sum_fuzz(const ExperimentOptions& opts, Json& ev) {
  bool ok = true;
  ev["rules"] = Json::array();
  for (RuleId rule : fuzzable_rules()) {
    FuzzConfig cfg;
    cfg.rule = rule;
    cfg.samples = opts.samples;
    cfg.seed = opts.seed;
    const FuzzResult r = fuzz_rule_parallel(cfg);
    Json j{{"rule", to_string(rule)}, {"samples", cfg.samples}, {"informative", r.informative},
           {"violations", r.first_violation ? 1 : 0}};
    if (r.first_violation) {
      j["firstViolation"] = outcome_json(r.first_violation->outcome);
      j["firstViolation"]["index"] = r.first_violation->index;
      ok = false;
    }
    ev["rules"].push_back(j);
  }
  return ok;
}

bool run_omega_liar(const ExperimentOptions& opts, Json& ev) {
  auto sig = omega_liar_signature();
  const OmegaLiarDerivations d = omega_liar_derivation(*sig, opts.depth);
  const CheckReport main = check_derivation(d.main, VacuousPolicy::Multiplicative, opts.depth, *sig);
  ev["main"] = report_summary(main);
  SchematicSequent final_expected;
  final_expected.suc.plain.add(omega_liar_sentence());
  bool ok = main.ok && sides_equivalent(d.main.conclusion.suc, final_expected.suc, *sig) && d.main.conclusion.ant.empty();
  ev["certified"] = Json::array();
  for (std::size_t i = 0; i < d.witnesses.size(); ++i) {
    const CheckReport r = check_derivation(d.witnesses[i], VacuousPolicy::Multiplicative, opts.depth, *sig);
    SchematicSequent want;
    want.ant.plain.add(omega_liar_instance(Term::numeral(i)));
    const bool shape = compare_sequents(want, d.witnesses[i].conclusion, *sig).ok();
    ok = ok && r.ok && shape;
    ev["certified"].push_back({{"index", i}, {"sequent", to_string(want)}, {"ok", r.ok && shape}});
  }
  return ok;
}

bool run_liar_values(const ExperimentOptions&, Json& ev) {
  auto sig = vacuous_liar_signature();
  Valuation v(sig, QuantifierMode::Sum);
  const Formula tl = Formula::atom("T", {Term::constant("l")});
  v.set_unknown(tl);
  const Formula liar = Formula::neg(Formula::exists("x", tl));
  const PiecewiseLinear f = eval_parametric(v, liar);
  const auto fixed = f.fixed_points();
  ev["sentence"] = to_string(liar);
  ev["unknown"] = to_string(tl);
  ev["value"] = piecewise_json(f);
  ev["fixedPoints"] = solutions_json(fixed);
  const std::vector<Piece> want{
      Piece{Rational(0), Rational(0), true, true, Affine{Rational(0), Rational(1)}},
      Piece{Rational(0), Rational(1), false, true, Affine{Rational(0), Rational(0)}},
  };
  return f.pieces() == want && fixed.empty();
}

bool run_vacuous_liar(const ExperimentOptions& opts, Json& ev) {
  auto sig = vacuous_liar_signature();
  const Derivation d = vacuous_liar_derivation();
  const CheckReport mult = check_derivation(d, VacuousPolicy::Multiplicative, opts.depth, *sig);
  const CheckReport add = check_derivation(d, VacuousPolicy::Additive, opts.depth, *sig);
  ev["multiplicative"] = report_summary(mult);
  ev["additive"] = report_summary(add);
  const Formula tl = Formula::atom("T", {Term::constant("l")});
  const Formula ex = Formula::exists("x", tl);
  SchematicSequent premise;
  premise.ant.plain.add(tl);
  premise.suc.plain.add(tl);
  SchematicSequent conclusion;
  conclusion.ant.plain.add(ex);
  conclusion.suc.plain.add(tl);
  const Verdict inst_add = check_instance(RuleId::ExistsL, {premise}, nullptr, conclusion, VacuousPolicy::Additive, *sig);
  const Verdict inst_mult =
      check_instance(RuleId::ExistsL, {premise}, nullptr, conclusion, VacuousPolicy::Multiplicative, *sig);
  ev["additiveInstance"] = {{"sequent", to_string(conclusion)},
                            {"additive", to_string(inst_add.kind)},
                            {"multiplicative", to_string(inst_mult.kind)}};
  SchematicSequent final_expected;
  final_expected.suc.plain.add(Formula::neg(ex));
  const bool final_ok = compare_sequents(final_expected, d.conclusion, *sig).ok();
  const bool add_at_exists_r = !add.ok && add.nodes.back().rule == to_string(RuleId::ExistsR);
  return mult.ok && final_ok && add_at_exists_r && inst_add.ok() && !inst_mult.ok();
}

bool run_vacuous_compare(const ExperimentOptions&, Json& ev) {
  auto sig = vacuous_liar_signature();
  const Formula tl = Formula::atom("T", {Term::constant("l")});
  const Formula ex = Formula::exists("x", tl);
  SchematicSequent right_concl;
  right_concl.suc.plain.add(ex);
  SchematicSequent omega_copies;
  omega_copies.suc.plain.add(tl, Multiplicity::omega());
  SchematicSequent one_copy;
  one_copy.suc.plain.add(tl);
  SchematicSequent left_premise;
  left_premise.ant.plain.add(tl);
  left_premise.suc.plain.add(tl);
  SchematicSequent left_concl;
  left_concl.ant.plain.add(ex);
  left_concl.suc.plain.add(tl);

  struct Row {
    std::string step;
    VacuousPolicy policy;
    bool expect;
    Verdict got;
  };
  std::vector<Row> rows;
  for (VacuousPolicy p : {VacuousPolicy::Multiplicative, VacuousPolicy::Additive}) {
    const bool mult = p == VacuousPolicy::Multiplicative;
    rows.push_back({"ExistsRw from |- T(l)^w", p, mult,
                    check_instance(RuleId::ExistsR, {omega_copies}, nullptr, right_concl, p, *sig)});
    rows.push_back({"ExistsRw from |- T(l)", p, !mult,
                    check_instance(RuleId::ExistsR, {one_copy}, nullptr, right_concl, p, *sig)});
    rows.push_back({"ExistsLw: T(l) |- T(l) to Ex x T(l) |- T(l)", p, !mult,
                    check_instance(RuleId::ExistsL, {left_premise}, nullptr, left_concl, p, *sig)});
  }
  bool ok = true;
  ev["steps"] = Json::array();
  for (const auto& r : rows) {
    ok = ok && (r.got.ok() == r.expect);
    ev["steps"].push_back({{"step", r.step},
                           {"policy", to_string(r.policy)},
                           {"expected", r.expect ? "pass" : "fail"},
                           {"verdict", to_string(r.got.kind)}});
  }
  // The additive single-premise step is not sound under the sum clause.
  Valuation v(sig, QuantifierMode::Sum);
  v.set_atom(tl, UnitValue(Rational(1, 2)));
  const bool premise_sound = sequent_sound(v, left_premise.to_sequent());
  const bool conclusion_sound = sequent_sound(v, left_concl.to_sequent());
  ev["additiveStepUnderSum"] = {{"valuation", "T(l) = 1/2"},
                                {"premiseSound", premise_sound},
                                {"conclusionSound", conclusion_sound}};
  return ok && premise_sound && !conclusion_sound;
}

const std::map<std::string, std::function<bool(const ExperimentOptions&, Json&)>>& registry() {
  static const std::map<std::string, std::function<bool(const ExperimentOptions&, Json&)>> r{
      {"thm1", run_sup_counterexample},
      {"lemma1", run_summation},
      {"thm2-fuzz", run_sum_fuzz},
      {"prop1", run_omega_liar},
      {"prop2", run_liar_values},
      {"prop3", run_vacuous_liar},
      {"vacuous-compare", run_vacuous_compare},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids{"thm1", "lemma1", "thm2-fuzz", "prop1", "prop2", "prop3", "vacuous-compare"};
  return ids;
}

ExperimentResult run_experiment(const std::string& id, const ExperimentOptions& opts) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown experiment '" + id + "'");
  ExperimentResult r;
  r.id = id;
  r.seed = opts.seed;
  r.evidence = Json::object();
  const auto t0 = std::chrono::steady_clock::now();
  r.pass = it->second(opts, r.evidence);
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json result_json(const ExperimentResult& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = r.pass ? "pass" : "fail";
  j["seed"] = r.seed;
  j["runtimeMs"] = static_cast<long long>(r.runtime_ms);
  j["evidence"] = r.evidence;
  return j;
}

Json piecewise_json(const PiecewiseLinear& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back({{"lo", to_string(p.lo)},
                      {"hi", to_string(p.hi)},
                      {"closedLo", p.closed_lo},
                      {"closedHi", p.closed_hi},
                      {"a", to_string(p.f.a)},
                      {"b", to_string(p.f.b)}});
  }
  return Json{{"pieces", pieces}};
}

Json solutions_json(const std::vector<SolutionInterval>& s) {
  Json out = Json::array();
  for (const auto& i : s) out.push_back(to_string(i));
  return out;
}

}  // namespace mqlogic
