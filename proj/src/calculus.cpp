#include "mqlogic/calculus.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "mqlogic/rewrite.hpp"

namespace mqlogic {

namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 9> kRuleNames{{
    {RuleId::Init, "Init"},
    {RuleId::NegL, "NegL"},
    {RuleId::NegR, "NegR"},
    {RuleId::CondL, "CondL"},
    {RuleId::CondR, "CondR"},
    {RuleId::ExistsL, "ExistsLw"},
    {RuleId::ExistsR, "ExistsRw"},
    {RuleId::TL, "TL"},
    {RuleId::TR, "TR"},
}};

}  // namespace

std::string to_string(RuleId r) {
  for (const auto& [id, name] : kRuleNames) {
    if (id == r) return std::string(name);
  }
  throw std::logic_error("unknown rule id");
}

std::optional<RuleId> rule_from_string(std::string_view s) {
  for (const auto& [id, name] : kRuleNames) {
    if (name == s) return id;
  }
  return std::nullopt;
}

std::string to_string(VacuousPolicy p) { return p == VacuousPolicy::Multiplicative ? "multiplicative" : "additive"; }

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Pass: return "pass";
    case VerdictKind::ShapeMismatch: return "shape-mismatch";
    case VerdictKind::MultiplicityMismatch: return "multiplicity-mismatch";
    case VerdictKind::FamilyMismatch: return "family-mismatch";
    case VerdictKind::NamingViolation: return "naming-violation";
    case VerdictKind::PremiseCount: return "premise-count";
  }
  return "?";
}

namespace {

std::string side_name(Side s) { return s == Side::Ant ? "antecedent" : "succedent"; }

bool is_truth_atom(const Formula& f) {
  return f.kind() == Formula::Kind::Atom && f.symbol() == "T" && f.args().size() == 1;
}

// The sentence a T-argument names. Open name literals are accepted so that
// family templates can be checked with the index left symbolic.
std::optional<Formula> named_by(const Term& t, const Signature& sig) {
  const Term nf = normalize_term(t, sig);
  if (nf.kind() == Term::Kind::Const) return sig.named_sentence(nf.symbol());
  if (nf.kind() == Term::Kind::Quote) return nf.quoted();
  return std::nullopt;
}

template <class Pred>
std::vector<Formula> candidates(const SchematicSide& side, const Signature& sig, const std::optional<Principal>& principal,
                                Side which, Pred shape) {
  std::vector<Formula> out;
  if (principal) {
    if (principal->side != which) return out;
    Formula f = normalize_formula(principal->formula, sig);
    if (shape(f)) out.push_back(f);
    return out;
  }
  const SchematicSide c = canonical(side, sig);
  for (const auto& [f, m] : c.plain.entries()) {
    if (shape(f)) out.push_back(f);
  }
  for (const auto& seg : c.segments) {
    Formula f = segment_member(seg, seg.start, sig);
    if (shape(f)) out.push_back(f);
  }
  return out;
}

void add(SchematicSide& s, const Formula& f, Multiplicity m = Multiplicity::finite(1)) { s.plain.add(f, m); }

Verdict no_principal(RuleId rule, Side side) {
  return Verdict::fail(VerdictKind::ShapeMismatch,
                       to_string(rule) + ": no principal formula of the right form in the " + side_name(side));
}

Verdict check_init(const SchematicSequent& c, const Signature& sig) {
  const SchematicSequent cc = canonical(c, sig);
  for (const auto& [f, m] : cc.ant.plain.entries()) {
    if (remove_occurrence(cc.suc, f, sig)) return Verdict::pass();
  }
  for (const auto& [f, m] : cc.suc.plain.entries()) {
    if (remove_occurrence(cc.ant, f, sig)) return Verdict::pass();
  }
  for (const auto& seg : cc.ant.segments) {
    if (remove_occurrence(cc.suc, segment_member(seg, seg.start, sig), sig)) return Verdict::pass();
  }
  for (const auto& seg : cc.suc.segments) {
    if (remove_occurrence(cc.ant, segment_member(seg, seg.start, sig), sig)) return Verdict::pass();
  }
  return Verdict::fail(VerdictKind::ShapeMismatch, "Init: no formula occurs on both sides of " + to_string(cc));
}

Verdict check_single(RuleId rule, const SchematicSequent& premise, const SchematicSequent& conclusion,
                     VacuousPolicy policy, const Signature& sig, const std::optional<Principal>& principal) {
  const Side side = (rule == RuleId::NegL || rule == RuleId::TL) ? Side::Ant : Side::Suc;
  if ((rule == RuleId::TL || rule == RuleId::TR) && !sig.has_naming_scheme()) {
    return Verdict::fail(VerdictKind::NamingViolation, to_string(rule) + " needs a signature with a naming scheme");
  }
  auto shape = [rule](const Formula& f) {
    switch (rule) {
      case RuleId::NegL:
      case RuleId::NegR: return f.kind() == Formula::Kind::Neg;
      case RuleId::CondR: return f.kind() == Formula::Kind::Cond;
      case RuleId::ExistsR: return f.kind() == Formula::Kind::Exists;
      default: return is_truth_atom(f);
    }
  };
  std::optional<Verdict> first_failure;
  for (const auto& c : candidates(conclusion.side(side), sig, principal, side, shape)) {
    auto ctx = remove_occurrence(conclusion.side(side), c, sig);
    if (!ctx) continue;
    SchematicSequent expected = conclusion;
    expected.side(side) = *ctx;
    switch (rule) {
      case RuleId::NegL: add(expected.suc, c.left()); break;
      case RuleId::NegR: add(expected.ant, c.left()); break;
      case RuleId::CondR:
        add(expected.ant, c.left());
        add(expected.suc, c.right());
        break;
      case RuleId::TL:
      case RuleId::TR: {
        auto named = named_by(c.args()[0], sig);
        if (!named) {
          if (!first_failure) {
            first_failure = Verdict::fail(VerdictKind::NamingViolation,
                                          to_string(rule) + ": " + to_string(c) + " is not T applied to a canonical name");
          }
          continue;
        }
        add(expected.side(side), *named);
        break;
      }
      case RuleId::ExistsR: {
        const Formula& body = c.left();
        const std::string& x = c.symbol();
        if (occurs_free(x, body)) {
          expected.suc.segments.push_back(FamilySegment{body, x, 0, Multiplicity::finite(1)});
        } else {
          add(expected.suc, body, policy == VacuousPolicy::Multiplicative ? Multiplicity::omega() : Multiplicity::finite(1));
        }
        break;
      }
      default: throw std::logic_error("not a single-premise rule");
    }
    Verdict v = compare_sequents(expected, premise, sig);
    if (v.ok()) return v;
    v.message = to_string(rule) + " on " + to_string(c) + ": premise " + v.message;
    if (!first_failure) first_failure = v;
  }
  return first_failure ? *first_failure : no_principal(rule, side);
}

Verdict check_cond_left(const SchematicSequent& p1, const SchematicSequent& p2, const SchematicSequent& conclusion,
                        const Signature& sig, const std::optional<Principal>& principal) {
  auto shape = [](const Formula& f) { return f.kind() == Formula::Kind::Cond; };
  std::optional<Verdict> first_failure;
  for (const auto& c : candidates(conclusion.ant, sig, principal, Side::Ant, shape)) {
    auto ctx1 = remove_occurrence(p1.suc, c.left(), sig);
    auto ctx2 = remove_occurrence(p2.ant, c.right(), sig);
    if (!ctx1 || !ctx2) {
      if (!first_failure) {
        first_failure = Verdict::fail(VerdictKind::ShapeMismatch,
                                      "CondL on " + to_string(c) + ": the left premise needs " + to_string(c.left()) +
                                          " in its succedent and the right premise " + to_string(c.right()) +
                                          " in its antecedent");
      }
      continue;
    }
    SchematicSequent expected{side_union(p1.ant, *ctx2), side_union(*ctx1, p2.suc)};
    add(expected.ant, c);
    Verdict v = compare_sequents(expected, conclusion, sig);
    if (v.ok()) return v;
    v.message = "CondL on " + to_string(c) + ": conclusion " + v.message;
    if (!first_failure) first_failure = v;
  }
  return first_failure ? *first_failure : no_principal(RuleId::CondL, Side::Ant);
}

bool mentions(const SchematicSequent& s, const std::string& var) {
  for (const SchematicSide* side : {&s.ant, &s.suc}) {
    for (const auto& [f, m] : side->plain.entries()) {
      if (occurs_free(var, f)) return true;
    }
    for (const auto& seg : side->segments) {
      if (seg.var != var && occurs_free(var, seg.pattern)) return true;
    }
  }
  return false;
}

// The ω-union of a side over all template indices n >= start.
std::optional<SchematicSide> union_over_template(const SchematicSide& side, const std::string& var, std::uint64_t start,
                                                 std::string& problem) {
  SchematicSide out;
  for (const auto& [f, m] : side.plain.entries()) {
    if (occurs_free(var, f)) {
      out.segments.push_back(FamilySegment{f, var, start, m});
    } else {
      out.plain.add(f, Multiplicity::omega());
    }
  }
  for (const auto& seg : side.segments) {
    if (seg.var != var && occurs_free(var, seg.pattern)) {
      problem = "a template segment depends on the family index: {" + to_string(seg.pattern) + " | " + seg.var + "}";
      return std::nullopt;
    }
    out.segments.push_back(FamilySegment{seg.pattern, seg.var, seg.start, Multiplicity::omega()});
  }
  return out;
}

Verdict single_exists_left(const Formula& c, const SchematicSequent& premise, const SchematicSequent& conclusion,
                           const Signature& sig) {
  auto ctx = remove_occurrence(premise.ant, c.left(), sig);
  if (!ctx) {
    return Verdict::fail(VerdictKind::ShapeMismatch,
                         "ExistsLw: the premise lacks " + to_string(c.left()) + " in its antecedent");
  }
  SchematicSequent expected{*ctx, premise.suc};
  add(expected.ant, c);
  Verdict v = compare_sequents(expected, conclusion, sig);
  if (!v.ok()) v.message = "ExistsLw on " + to_string(c) + ": conclusion " + v.message;
  return v;
}

Verdict exists_left_family(const Formula& c, const FamilySummary& fam, const SchematicSequent& conclusion,
                           VacuousPolicy policy, const Signature& sig) {
  const Formula& body = c.left();
  const std::string& x = c.symbol();
  const bool vacuous = !occurs_free(x, body);
  if (vacuous && policy == VacuousPolicy::Additive) {
    // One premise is enough; a family is accepted only if all members agree.
    if (mentions(fam.template_conclusion, fam.var)) {
      return Verdict::fail(VerdictKind::FamilyMismatch,
                           "ExistsLw (additive, vacuous): the template conclusion depends on " + fam.var);
    }
    for (std::size_t i = 0; i < fam.explicit_conclusions.size(); ++i) {
      const auto& e = fam.explicit_conclusions[i];
      if (!sides_equivalent(e.ant, fam.template_conclusion.ant, sig) ||
          !sides_equivalent(e.suc, fam.template_conclusion.suc, sig)) {
        return Verdict::fail(VerdictKind::FamilyMismatch,
                             "ExistsLw (additive, vacuous): member " + std::to_string(i) + " differs from the template");
      }
    }
    return single_exists_left(c, fam.template_conclusion, conclusion, sig);
  }
  if (fam.explicit_conclusions.size() != fam.start) {
    return Verdict::fail(VerdictKind::FamilyMismatch, "ExistsLw: " + std::to_string(fam.explicit_conclusions.size()) +
                                                          " explicit members for start index " +
                                                          std::to_string(fam.start));
  }
  SchematicSequent acc;
  for (std::uint64_t i = 0; i < fam.start; ++i) {
    const Formula inst = substitute(body, x, instance_term(sig, i));
    const auto& e = fam.explicit_conclusions[i];
    auto ctx = remove_occurrence(e.ant, inst, sig);
    if (!ctx) {
      return Verdict::fail(VerdictKind::FamilyMismatch,
                           "ExistsLw: member " + std::to_string(i) + " lacks " + to_string(inst) + " in its antecedent");
    }
    acc.ant = side_union(acc.ant, *ctx);
    acc.suc = side_union(acc.suc, e.suc);
  }
  Formula inst = body;
  try {
    inst = substitute(body, x, Term::var(fam.var));
  } catch (const std::invalid_argument&) {
    return Verdict::fail(VerdictKind::FamilyMismatch, "ExistsLw: family index " + fam.var + " is captured in " +
                                                          to_string(body));
  }
  auto ctx = remove_occurrence(fam.template_conclusion.ant, inst, sig);
  if (!ctx) {
    return Verdict::fail(VerdictKind::FamilyMismatch,
                         "ExistsLw: the template lacks " + to_string(inst) + " in its antecedent");
  }
  std::string problem;
  auto ant = union_over_template(*ctx, fam.var, fam.start, problem);
  auto suc = ant ? union_over_template(fam.template_conclusion.suc, fam.var, fam.start, problem) : std::nullopt;
  if (!ant || !suc) return Verdict::fail(VerdictKind::FamilyMismatch, "ExistsLw: " + problem);
  SchematicSequent expected{side_union(acc.ant, *ant), side_union(acc.suc, *suc)};
  add(expected.ant, c);
  Verdict v = compare_sequents(expected, conclusion, sig);
  if (!v.ok()) v.message = "ExistsLw on " + to_string(c) + ": conclusion " + v.message;
  return v;
}

Verdict check_exists_left(const std::vector<SchematicSequent>& premises, const FamilySummary* family,
                          const SchematicSequent& conclusion, VacuousPolicy policy, const Signature& sig,
                          const std::optional<Principal>& principal) {
  auto shape = [](const Formula& f) { return f.kind() == Formula::Kind::Exists; };
  std::optional<Verdict> first_failure;
  for (const auto& c : candidates(conclusion.ant, sig, principal, Side::Ant, shape)) {
    Verdict v;
    if (family) {
      if (!premises.empty()) return Verdict::fail(VerdictKind::PremiseCount, "ExistsLw takes a family, not premises");
      v = exists_left_family(c, *family, conclusion, policy, sig);
    } else if (policy == VacuousPolicy::Additive && !occurs_free(c.symbol(), c.left()) && premises.size() == 1) {
      v = single_exists_left(c, premises[0], conclusion, sig);
    } else {
      v = Verdict::fail(VerdictKind::FamilyMismatch,
                        "ExistsLw on " + to_string(c) + " needs a family of premises, one per closed term");
    }
    if (v.ok()) return v;
    if (!first_failure) first_failure = v;
  }
  return first_failure ? *first_failure : no_principal(RuleId::ExistsL, Side::Ant);
}

}  // namespace

Verdict check_instance(RuleId rule, const std::vector<SchematicSequent>& premises, const FamilySummary* family,
                       const SchematicSequent& conclusion, VacuousPolicy policy, const Signature& sig,
                       const std::optional<Principal>& principal) {
  auto count = [&](std::size_t n) -> std::optional<Verdict> {
    if (premises.size() == n && (family == nullptr)) return std::nullopt;
    return Verdict::fail(VerdictKind::PremiseCount, to_string(rule) + " takes " + std::to_string(n) +
                                                        " premise(s), got " + std::to_string(premises.size()) +
                                                        (family ? " and a family" : ""));
  };
  switch (rule) {
    case RuleId::Init:
      if (auto bad = count(0)) return *bad;
      return check_init(conclusion, sig);
    case RuleId::NegL:
    case RuleId::NegR:
    case RuleId::CondR:
    case RuleId::ExistsR:
    case RuleId::TL:
    case RuleId::TR:
      if (auto bad = count(1)) return *bad;
      return check_single(rule, premises[0], conclusion, policy, sig, principal);
    case RuleId::CondL:
      if (auto bad = count(2)) return *bad;
      return check_cond_left(premises[0], premises[1], conclusion, sig, principal);
    case RuleId::ExistsL:
      return check_exists_left(premises, family, conclusion, policy, sig, principal);
  }
  throw std::logic_error("unknown rule");
}

namespace {

bool uses_previous(const Derivation& d) {
  if (d.previous_member) return true;
  return std::any_of(d.premises.begin(), d.premises.end(), uses_previous);
}

Term succ_power(Term t, std::uint64_t k) {
  for (std::uint64_t i = 0; i < k; ++i) t = Term::app("succ", {t});
  return t;
}

std::optional<std::string> stray_variable(const SchematicSequent& s, const std::set<std::string>& allowed) {
  for (const SchematicSide* side : {&s.ant, &s.suc}) {
    for (const auto& [f, m] : side->plain.entries()) {
      for (const auto& v : free_vars(f)) {
        if (!allowed.count(v)) return v;
      }
    }
    for (const auto& seg : side->segments) {
      for (const auto& v : free_vars(seg.pattern)) {
        if (v != seg.var && !allowed.count(v)) return v;
      }
    }
  }
  return std::nullopt;
}

class Checker {
 public:
  Checker(VacuousPolicy policy, std::size_t depth, const Signature& sig, CheckReport& report)
      : policy_(policy), depth_(depth), sig_(sig), report_(report) {}

  bool visit(const Derivation& d, const std::string& path, const SchematicSequent* prev,
             const std::set<std::string>& scope) {
    if (d.previous_member) {
      // Only reachable for a root; leaves are handled by the parent.
      return fail(path, "prev", SchematicSequent{}, Verdict::fail(VerdictKind::FamilyMismatch, "dangling previous-member reference"));
    }
    if (auto v = stray_variable(d.conclusion, scope)) {
      return fail(path, to_string(d.rule), d.conclusion,
                  Verdict::fail(VerdictKind::ShapeMismatch, "free variable " + *v + " in " + to_string(d.conclusion)));
    }
    std::vector<SchematicSequent> premises;
    for (const auto& p : d.premises) {
      if (p.previous_member) {
        if (!prev) {
          return fail(path, to_string(d.rule), d.conclusion,
                      Verdict::fail(VerdictKind::FamilyMismatch, "previous-member reference outside a family"));
        }
        premises.push_back(*prev);
      } else {
        premises.push_back(p.conclusion);
      }
    }
    std::optional<FamilySummary> summary;
    if (d.family) {
      summary = FamilySummary{d.family->var, d.family->start, {}, d.family->tmpl.conclusion};
      for (const auto& e : d.family->explicit_members) summary->explicit_conclusions.push_back(e.conclusion);
    }
    Verdict v = check_instance(d.rule, premises, summary ? &*summary : nullptr, d.conclusion, policy_, sig_, d.principal);
    if (!v.ok()) return fail(path, to_string(d.rule), d.conclusion, v);
    report_.nodes.push_back(NodeReport{path, to_string(d.rule), d.conclusion, v});

    for (std::size_t j = 0; j < d.premises.size(); ++j) {
      const auto& p = d.premises[j];
      const std::string sub = path + ".p" + std::to_string(j);
      if (p.previous_member) {
        report_.nodes.push_back(NodeReport{sub, "prev", *prev, Verdict::pass()});
      } else if (!visit(p, sub, prev, scope)) {
        return false;
      }
    }
    if (d.family) return visit_family(*d.family, path, scope);
    return true;
  }

 private:
  bool fail(const std::string& path, const std::string& rule, const SchematicSequent& s, Verdict v) {
    report_.nodes.push_back(NodeReport{path, rule, s, v});
    report_.ok = false;
    report_.failed_path = path;
    return false;
  }

  bool visit_family(const UniformFamily& fam, const std::string& path, const std::set<std::string>& scope) {
    const auto& ex = fam.explicit_members;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      const SchematicSequent* prev = i > 0 ? &ex[i - 1].conclusion : nullptr;
      if (!visit(ex[i], path + ".e" + std::to_string(i), prev, scope)) return false;
    }
    const std::string tpath = path + ".t";
    for (const SchematicSide* side : {&fam.tmpl.conclusion.ant, &fam.tmpl.conclusion.suc}) {
      for (const auto& [f, m] : side->plain.entries()) {
        if (bound_vars(f).count(fam.var)) {
          return fail(tpath, to_string(fam.tmpl.rule), fam.tmpl.conclusion,
                      Verdict::fail(VerdictKind::FamilyMismatch, "family index " + fam.var + " is bound in the template"));
        }
      }
    }
    const bool chained = uses_previous(fam.tmpl);
    if (chained && fam.start == 0) {
      return fail(tpath, to_string(fam.tmpl.rule), fam.tmpl.conclusion,
                  Verdict::fail(VerdictKind::FamilyMismatch, "member 0 has no previous member"));
    }
    if (chained && !ex.empty()) {
      // The template must also describe the last explicit member, so that the
      // symbolic check below covers the first template member.
      const auto below = instantiate(fam.tmpl, fam.var, instance_term(sig_, fam.start - 1)).conclusion;
      Verdict v = compare_sequents(below, ex.back().conclusion, sig_);
      if (!v.ok()) {
        v.kind = VerdictKind::FamilyMismatch;
        v.message = "template at index " + std::to_string(fam.start - 1) + " differs from the last explicit member: " + v.message;
        return fail(tpath, to_string(fam.tmpl.rule), fam.tmpl.conclusion, v);
      }
    }

    // Symbolic pass with the index left as a variable.
    std::set<std::string> inner = scope;
    inner.insert(fam.var);
    Derivation symbolic = fam.tmpl;
    std::optional<SchematicSequent> prev;
    if (sig_.numerals() && fam.start > 0) {
      symbolic = instantiate(fam.tmpl, fam.var, succ_power(Term::var(fam.var), fam.start));
      if (chained) {
        prev = instantiate(fam.tmpl, fam.var, succ_power(Term::var(fam.var), fam.start - 1)).conclusion;
      }
    } else if (chained) {
      return fail(tpath, to_string(fam.tmpl.rule), fam.tmpl.conclusion,
                  Verdict::fail(VerdictKind::FamilyMismatch,
                                "previous-member templates need numeral indices"));
    }
    if (!visit(symbolic, tpath, prev ? &*prev : nullptr, inner)) return false;

    // Concrete members start..start+K-1.
    report_.bounded = true;
    for (std::uint64_t j = fam.start; j < fam.start + depth_; ++j) {
      const Derivation member = instantiate(fam.tmpl, fam.var, instance_term(sig_, j));
      std::optional<SchematicSequent> before;
      if (j > fam.start) {
        before = instantiate(fam.tmpl, fam.var, instance_term(sig_, j - 1)).conclusion;
      } else if (!ex.empty()) {
        before = ex.back().conclusion;
      }
      CheckReport scratch;
      Checker sub(policy_, depth_, sig_, scratch);
      const std::string mpath = path + ".m" + std::to_string(j);
      const bool ok = sub.visit(member, mpath, before ? &*before : nullptr, scope);
      Verdict v = ok ? Verdict::pass() : scratch.nodes.back().verdict;
      report_.family_spot_checks.push_back(SpotCheck{path, j, v});
      for (const auto& s : scratch.family_spot_checks) report_.family_spot_checks.push_back(s);
      if (!ok) {
        report_.nodes.push_back(scratch.nodes.back());
        report_.ok = false;
        report_.failed_path = scratch.failed_path;
        return false;
      }
    }
    return true;
  }

  VacuousPolicy policy_;
  std::size_t depth_;
  const Signature& sig_;
  CheckReport& report_;
};

}  // namespace

CheckReport check_derivation(const Derivation& d, VacuousPolicy policy, std::size_t depth, const Signature& sig) {
  if (depth == 0) throw std::invalid_argument("family check depth must be at least 1");
  CheckReport report;
  report.policy = policy;
  report.depth = depth;
  Checker checker(policy, depth, sig, report);
  checker.visit(d, "$", nullptr, {});
  return report;
}

}  // namespace mqlogic
