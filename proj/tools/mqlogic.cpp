// mqlogic command-line front end.
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mqlogic/derivation_json.hpp"
#include "mqlogic/errors.hpp"
#include "mqlogic/experiments.hpp"
#include "mqlogic/fuzz.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/semantics.hpp"

using namespace mqlogic;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kSemantic = 3 };

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::optional<RuleId> parse_rule(std::string s) {
  if (auto r = rule_from_string(s)) return r;
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "init") return RuleId::Init;
  if (s == "negl") return RuleId::NegL;
  if (s == "negr") return RuleId::NegR;
  if (s == "condl") return RuleId::CondL;
  if (s == "condr") return RuleId::CondR;
  if (s == "existsl" || s == "existslw") return RuleId::ExistsL;
  if (s == "existsr" || s == "existsrw") return RuleId::ExistsR;
  return std::nullopt;
}

Json fuzz_json(const FuzzResult& r) {
  Json j;
  j["rule"] = to_string(r.config.rule);
  j["mode"] = to_string(r.config.mode);
  j["samples"] = r.config.samples;
  j["seed"] = r.config.seed;
  j["informative"] = r.informative;
  j["status"] = r.first_violation ? "violation" : "no-violation";
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    j["violation"] = {{"index", v.index},
                      {"valuation", v.valuation},
                      {"premises", v.outcome.premises},
                      {"conclusion", v.outcome.conclusion}};
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluator and derivation checker for infinitary Lukasiewicz sequent calculi"};
  app.require_subcommand(1);

  std::string valuation_file;
  std::string formula_text;
  std::string sequent_text;
  std::string derivation_file;
  std::string signature_file;
  std::string policy = "mult";
  std::size_t depth = 8;
  std::string rule_name;
  std::string mode = "sum";
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  bool serial = false;
  std::string repro_id;
  bool as_json = false;

  auto* eval = app.add_subcommand("eval", "Value of a sentence under a valuation");
  eval->add_option("-v,--valuation", valuation_file, "Valuation file")->required();
  eval->add_option("-f,--formula", formula_text, "Sentence")->required();

  auto* check_seq = app.add_subcommand("check-sequent", "Soundness of a sequent under a valuation");
  check_seq->add_option("-v,--valuation", valuation_file, "Valuation file")->required();
  check_seq->add_option("-s,--sequent", sequent_text, "Sequent, e.g. \"A, B^w |- C\"")->required();

  auto* check_der = app.add_subcommand("check-derivation", "Check a derivation tree given as JSON");
  check_der->add_option("-d,--derivation", derivation_file, "Derivation JSON file")->required();
  check_der->add_option("--policy", policy, "Vacuous quantifier policy")->check(CLI::IsMember({"mult", "add"}));
  check_der->add_option("--depth", depth, "Family members checked per family")->check(CLI::PositiveNumber);
  check_der->add_option("--sig", signature_file, "Signature file, if the JSON has none");

  auto* fuzz = app.add_subcommand("fuzz", "Search for unsound instances of a rule");
  fuzz->add_option("--rule", rule_name, "Init, NegL, NegR, CondL, CondR, ExistsLw, ExistsRw")->required();
  fuzz->add_option("--mode", mode, "Quantifier clause")->check(CLI::IsMember({"sum", "sup"}));
  fuzz->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed, "Run seed (MQLOGIC_SEED overrides)");
  fuzz->add_flag("--serial", serial, "Use the single-threaded kernel");

  auto* solve = app.add_subcommand("solve-selfref", "Value as a function of the unknown atom, and its fixed points");
  solve->add_option("-v,--valuation", valuation_file, "Valuation file with an `unknown` line")->required();
  solve->add_option("-f,--formula", formula_text, "Sentence")->required();

  auto* repro = app.add_subcommand("repro", "Run a canned experiment");
  repro->add_option("id", repro_id, "Experiment id or `all`")->required();
  repro->add_flag("--json", as_json, "Print the full result as JSON");
  repro->add_option("--seed", seed, "Run seed (MQLOGIC_SEED overrides)");
  repro->add_option("--samples", samples, "Samples for sampling experiments")->check(CLI::PositiveNumber);
  repro->add_option("--depth", depth, "Family spot-check depth")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) {
      const Valuation v = Valuation::load(valuation_file);
      const Formula f = parse_formula(formula_text, v.signature());
      emit(Json{{"value", to_string(eval_formula(v, f).value())}});
      return kPass;
    }
    if (*check_seq) {
      const Valuation v = Valuation::load(valuation_file);
      const Sequent s = parse_sequent(sequent_text, v.signature());
      const UnitValue a = eval_antecedent(v, s.antecedent);
      const UnitValue b = eval_succedent(v, s.succedent);
      const bool sound = a <= b;
      emit(Json{{"sequent", to_string(s)}, {"antecedent", to_string(a.value())}, {"succedent", to_string(b.value())},
                {"sound", sound}});
      return sound ? kPass : kMismatch;
    }
    if (*check_der) {
      std::optional<std::string> sig_path;
      if (!signature_file.empty()) sig_path = signature_file;
      const DerivationFile file = load_derivation_file(derivation_file, sig_path);
      const VacuousPolicy p = policy == "add" ? VacuousPolicy::Additive : VacuousPolicy::Multiplicative;
      const CheckReport r = check_derivation(file.root, p, depth, *file.signature);
      emit(report_to_json(r));
      return r.ok ? kPass : kMismatch;
    }
    if (*fuzz) {
      auto rule = parse_rule(rule_name);
      if (!rule || *rule == RuleId::TL || *rule == RuleId::TR) {
        std::cerr << "fuzz: unsupported rule '" << rule_name << "'\n";
        return kUsage;
      }
      FuzzConfig cfg;
      cfg.rule = *rule;
      cfg.mode = mode == "sup" ? QuantifierMode::Sup : QuantifierMode::Sum;
      cfg.samples = samples;
      cfg.seed = seed_from_env(seed);
      const FuzzResult r = serial ? fuzz_rule_serial(cfg) : fuzz_rule_parallel(cfg);
      emit(fuzz_json(r));
      return r.first_violation ? kMismatch : kPass;
    }
    if (*solve) {
      const Valuation v = Valuation::load(valuation_file);
      const Formula f = parse_formula(formula_text, v.signature());
      const PiecewiseLinear value = eval_parametric(v, f);
      Json out = piecewise_json(value);
      out["fixedPoints"] = solutions_json(value.fixed_points());
      emit(out);
      return kPass;
    }
    if (*repro) {
      ExperimentOptions opts;
      opts.seed = seed_from_env(repro->count("--seed") ? seed : opts.seed);
      opts.samples = samples;
      opts.depth = depth;
      std::vector<std::string> ids;
      if (repro_id == "all") {
        ids = experiment_ids();
      } else {
        ids = {repro_id};
      }
      bool all_pass = true;
      Json results = Json::array();
      for (const auto& id : ids) {
        const ExperimentResult r = run_experiment(id, opts);
        all_pass = all_pass && r.pass;
        if (as_json) {
          results.push_back(result_json(r));
        } else {
          std::cout << (r.pass ? "PASS " : "FAIL ") << id << "  (" << static_cast<long long>(r.runtime_ms) << " ms)\n";
        }
      }
      if (as_json) emit(ids.size() == 1 ? results[0] : results);
      return all_pass ? kPass : kMismatch;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownSymbolError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SignatureError& e) {
    std::cerr << "signature error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "derivation file error: " << e.what() << "\n";
    return kUsage;
  } catch (const SemanticError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return kSemantic;
  } catch (const RewriteBudgetExceeded& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
