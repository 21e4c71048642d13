#pragma once

// Clause-by-clause evaluation shared by the exact and the parametric
// evaluators. The domain supplies the arithmetic.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mqlogic/errors.hpp"
#include "mqlogic/rewrite.hpp"
#include "mqlogic/valuation.hpp"

namespace mqlogic::detail {

template <class Domain>
class Evaluator {
 public:
  using Value = typename Domain::Value;

  struct Instances {
    std::vector<std::pair<Term, Value>> explicit_values;
    Value tail;
  };

  Evaluator(const Valuation& v, Domain dom) : v_(v), sig_(v.signature()), dom_(std::move(dom)) {
    for (const auto& r : sig_.rules()) collect_heads(r.lhs);
    if (sig_.numerals()) rule_heads_.insert("succ");
  }

  Value eval(const Formula& f) { return eval(f, v_.unfold_budget()); }

  Instances instances(const Formula& body, const std::string& x) {
    return instances(body, x, v_.unfold_budget());
  }

 private:
  Value eval(const Formula& f, std::size_t budget) {
    if (!f.is_sentence()) throw SemanticError("cannot evaluate open formula " + to_string(f));
    if (auto it = memo_.find(f); it != memo_.end() && it->second.second <= budget) return it->second.first;
    Value out = compute(f, budget);
    memo_.insert_or_assign(f, std::make_pair(out, budget));
    return out;
  }

  Value compute(const Formula& f, std::size_t budget) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        return atom(f, budget);
      case Formula::Kind::Neg:
        return dom_.neg(eval(f.left(), budget));
      case Formula::Kind::Cond:
        return dom_.cond(eval(f.left(), budget), eval(f.right(), budget));
      case Formula::Kind::Exists: {
        Instances in = instances(f.left(), f.symbol(), budget);
        std::vector<Value> vals;
        vals.reserve(in.explicit_values.size());
        for (auto& [t, val] : in.explicit_values) vals.push_back(std::move(val));
        return v_.mode() == QuantifierMode::Sum ? dom_.sum(vals, in.tail) : dom_.sup(vals, in.tail);
      }
    }
    throw std::logic_error("unreachable");
  }

  Value atom(const Formula& f, std::size_t budget) {
    const Formula a = normalize_formula(f, sig_);
    if (v_.unknown() && *v_.unknown() == a) return dom_.unknown();
    if (auto val = v_.atom_value(a)) return dom_.constant(*val);
    if (v_.transparent() && a.symbol() == "T") {
      if (auto s = denoted_sentence(a.args()[0], sig_)) {
        if (budget == 0) throw UngroundedError("transparent unfolding of " + to_string(f) + " did not bottom out");
        return eval(*s, budget - 1);
      }
    }
    return dom_.constant(v_.default_for(a.symbol()));
  }

  Instances instances(const Formula& body, const std::string& x, std::size_t budget) {
    Instances out;
    if (!occurs_free(x, body)) {
      out.tail = eval(body, budget);
      return out;
    }
    guard(body, x);
    std::set<Term> cands = v_.relevant_terms();
    std::set<Term> local;
    collect_closed_subterms(body, local);
    std::size_t fresh_index = 0;
    for (const auto& t : local) {
      if (t.kind() == Term::Kind::Const && t.symbol().rfind("_fresh", 0) == 0) {
        fresh_index = std::max<std::size_t>(fresh_index, std::stoul(t.symbol().substr(6)) + 1);
      }
      cands.insert(normalize_term(t, sig_));
    }
    for (const auto& t : cands) out.explicit_values.emplace_back(t, eval(substitute(body, x, t), budget));
    const Term fresh = Term::constant("_fresh" + std::to_string(fresh_index));
    out.tail = eval(substitute(body, x, fresh), budget);
    return out;
  }

  // The tail method needs every instance to be in normal form already and
  // no instance to be unfolded through its name.
  void guard(const Formula& body, const std::string& x) {
    auto bad = [&](const std::string& why) {
      throw SemanticError("cannot evaluate quantification over " + x + " in " + to_string(body) + ": " + why);
    };
    auto check_term = [&](auto&& self, const Term& t) -> void {
      if (t.kind() == Term::Kind::Quote && occurs(x, t)) bad("variable inside a name literal");
      if (t.kind() != Term::Kind::App) return;
      if (rule_heads_.count(t.symbol()) && occurs(x, t)) bad("variable under rewritable symbol " + t.symbol());
      for (const auto& a : t.args()) self(self, a);
    };
    auto check_formula = [&](auto&& self, const Formula& f) -> void {
      switch (f.kind()) {
        case Formula::Kind::Atom:
          for (const auto& a : f.args()) {
            if (v_.transparent() && f.symbol() == "T" && occurs(x, a)) bad("variable in a transparent T position");
            check_term(check_term, a);
          }
          break;
        case Formula::Kind::Neg:
          self(self, f.left());
          break;
        case Formula::Kind::Exists:
          if (f.symbol() != x) self(self, f.left());
          break;
        case Formula::Kind::Cond:
          self(self, f.left());
          self(self, f.right());
          break;
      }
    };
    check_formula(check_formula, body);
  }

  void collect_heads(const Term& t) {
    if (t.kind() == Term::Kind::App) {
      rule_heads_.insert(t.symbol());
      for (const auto& a : t.args()) collect_heads(a);
    } else if (t.kind() == Term::Kind::Const) {
      rule_heads_.insert(t.symbol());
    }
  }

  const Valuation& v_;
  const Signature& sig_;
  Domain dom_;
  std::set<std::string> rule_heads_;
  std::map<Formula, std::pair<Value, std::size_t>> memo_;
};

}  // namespace mqlogic::detail
