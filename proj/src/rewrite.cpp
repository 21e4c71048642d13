#include "mqlogic/rewrite.hpp"

#include <algorithm>
#include <set>

#include "mqlogic/errors.hpp"

namespace mqlogic {

namespace {

using Binding = std::vector<std::pair<std::string, Term>>;

bool match_formula(const Formula& p, const Formula& f, Binding& b) {
  if (p.kind() != f.kind() || p.symbol() != f.symbol()) return false;
  switch (p.kind()) {
    case Formula::Kind::Atom: {
      if (p.args().size() != f.args().size()) return false;
      for (std::size_t i = 0; i < p.args().size(); ++i) {
        if (!match_pattern(p.args()[i], f.args()[i], b)) return false;
      }
      return true;
    }
    case Formula::Kind::Neg:
    case Formula::Kind::Exists:
      return match_formula(p.left(), f.left(), b);
    case Formula::Kind::Cond:
      return match_formula(p.left(), f.left(), b) && match_formula(p.right(), f.right(), b);
  }
  return false;
}

Term instantiate(const Term& rhs, const Binding& b) {
  Term out = rhs;
  // Rules are left-linear with disjoint pattern variables, and bound terms
  // are substituted simultaneously by first renaming into reserved names.
  for (std::size_t i = 0; i < b.size(); ++i) out = substitute(out, b[i].first, Term::var("_rw" + std::to_string(i)));
  for (std::size_t i = 0; i < b.size(); ++i) out = substitute(out, "_rw" + std::to_string(i), b[i].second);
  return out;
}

class Normalizer {
 public:
  Normalizer(const Signature& sig, Strategy st) : sig_(sig), st_(st) {}

  Term term(const Term& t) {
    if (st_ == Strategy::InnermostLeftmost) return innermost(t);
    Term cur = t;
    while (auto next = outer_step(cur)) {
      tick();
      cur = *next;
    }
    return cur;
  }

  Formula formula(const Formula& f) {
    return map_terms(f, [&](const Term& t) { return term(t); });
  }

 private:
  void tick() {
    if (++steps_ > sig_.step_budget()) {
      throw RewriteBudgetExceeded("rewriting exceeded " + std::to_string(sig_.step_budget()) + " steps");
    }
  }

  // One step at the root, assuming (for innermost) normalized arguments.
  std::optional<Term> root_step(const Term& t) {
    if (t.kind() == Term::Kind::App && sig_.numerals() && t.symbol() == "succ" &&
        t.args()[0].kind() == Term::Kind::Numeral) {
      return Term::numeral(t.args()[0].value() + 1);
    }
    if (t.kind() == Term::Kind::Quote && t.is_closed()) {
      if (auto c = sig_.declared_name(t.quoted())) return Term::constant(*c);
    }
    for (const auto& r : sig_.rules()) {
      Binding b;
      if (match_pattern(r.lhs, t, b)) return instantiate(r.rhs, b);
    }
    return std::nullopt;
  }

  Term innermost(const Term& t) {
    Term cur = t;
    switch (t.kind()) {
      case Term::Kind::App: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const auto& a : t.args()) args.push_back(innermost(a));
        cur = Term::app(t.symbol(), std::move(args));
        break;
      }
      case Term::Kind::Quote:
        cur = Term::quote(formula(t.quoted()));
        break;
      default:
        break;
    }
    if (auto next = root_step(cur)) {
      tick();
      return innermost(*next);
    }
    return cur;
  }

  std::optional<Formula> outer_step_formula(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (auto a = outer_step(f.args()[i])) {
            std::vector<Term> args(f.args().begin(), f.args().end());
            args[i] = *a;
            return Formula::atom(f.symbol(), std::move(args));
          }
        }
        return std::nullopt;
      }
      case Formula::Kind::Neg:
        if (auto g = outer_step_formula(f.left())) return Formula::neg(*g);
        return std::nullopt;
      case Formula::Kind::Exists:
        if (auto g = outer_step_formula(f.left())) return Formula::exists(f.symbol(), *g);
        return std::nullopt;
      case Formula::Kind::Cond:
        if (auto g = outer_step_formula(f.left())) return Formula::cond(*g, f.right());
        if (auto g = outer_step_formula(f.right())) return Formula::cond(f.left(), *g);
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<Term> outer_step(const Term& t) {
    if (t.kind() == Term::Kind::Quote) {
      // The name check needs the quoted sentence in normal form first.
      if (auto g = outer_step_formula(t.quoted())) return Term::quote(*g);
      return root_step(t);
    }
    if (auto r = root_step(t)) return r;
    if (t.kind() == Term::Kind::App) {
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (auto a = outer_step(t.args()[i])) {
          std::vector<Term> args(t.args().begin(), t.args().end());
          args[i] = *a;
          return Term::app(t.symbol(), std::move(args));
        }
      }
    }
    return std::nullopt;
  }

  const Signature& sig_;
  Strategy st_;
  std::size_t steps_ = 0;
};

// Odometer over [0,bound)^k, last position fastest.
bool advance(std::vector<std::size_t>& idx, std::size_t bound) {
  for (std::size_t p = idx.size(); p-- > 0;) {
    if (++idx[p] < bound) return true;
    idx[p] = 0;
  }
  return false;
}

}  // namespace

bool match_pattern(const Term& p, const Term& t, Binding& b) {
  switch (p.kind()) {
    case Term::Kind::Var: {
      for (const auto& [v, bound] : b) {
        if (v == p.symbol()) return bound == t;
      }
      b.emplace_back(p.symbol(), t);
      return true;
    }
    case Term::Kind::Const:
      return t.kind() == Term::Kind::Const && t.symbol() == p.symbol();
    case Term::Kind::Numeral:
      return t.kind() == Term::Kind::Numeral && t.value() == p.value();
    case Term::Kind::App:
      if (p.symbol() == "succ" && t.kind() == Term::Kind::Numeral && p.args().size() == 1) {
        return t.value() > 0 && match_pattern(p.args()[0], Term::numeral(t.value() - 1), b);
      }
      if (t.kind() != Term::Kind::App || t.symbol() != p.symbol() || t.args().size() != p.args().size()) {
        return false;
      }
      for (std::size_t i = 0; i < p.args().size(); ++i) {
        if (!match_pattern(p.args()[i], t.args()[i], b)) return false;
      }
      return true;
    case Term::Kind::Quote:
      return t.kind() == Term::Kind::Quote && match_formula(p.quoted(), t.quoted(), b);
  }
  return false;
}

Term normalize_term(const Term& t, const Signature& sig, Strategy strategy) {
  return Normalizer(sig, strategy).term(t);
}

Formula normalize_formula(const Formula& f, const Signature& sig, Strategy strategy) {
  return Normalizer(sig, strategy).formula(f);
}

bool formulas_equal(const Formula& a, const Formula& b, const Signature& sig) {
  if (a == b) return true;
  return normalize_formula(a, sig) == normalize_formula(b, sig);
}

Term name_of(const Formula& sentence, const Signature& sig) {
  if (!sentence.is_sentence()) throw std::invalid_argument("only sentences have names: " + to_string(sentence));
  Formula nf = normalize_formula(sentence, sig);
  if (auto c = sig.declared_name(nf)) return Term::constant(*c);
  return Term::quote(std::move(nf));
}

std::optional<Formula> denoted_sentence(const Term& t, const Signature& sig) {
  if (!t.is_closed()) return std::nullopt;
  Term nf = normalize_term(t, sig);
  if (nf.kind() == Term::Kind::Const) return sig.named_sentence(nf.symbol());
  if (nf.kind() == Term::Kind::Quote) return nf.quoted();
  return std::nullopt;
}

std::vector<Term> enumerate_closed_terms(const Signature& sig, std::size_t n) {
  if (sig.constants().empty() && !sig.numerals()) {
    throw SignatureError("the signature has no constants, so there are no closed terms");
  }
  std::vector<Term> all;
  if (n == 0) return all;
  if (sig.numerals()) all.push_back(Term::numeral(0));
  for (const auto& c : sig.constants()) all.push_back(Term::constant(c));

  std::vector<std::pair<std::string, std::size_t>> funs;
  if (sig.numerals()) funs.emplace_back("succ", 1);
  funs.insert(funs.end(), sig.functions().begin(), sig.functions().end());

  std::size_t level_start = 0;
  while (all.size() < n && !funs.empty()) {
    const std::size_t prev = all.size();
    for (const auto& [f, k] : funs) {
      std::vector<std::size_t> idx(k, 0);
      while (all.size() < n) {
        const bool fresh = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= level_start; });
        if (fresh) {
          if (f == "succ" && all[idx[0]].kind() == Term::Kind::Numeral) {
            all.push_back(Term::numeral(all[idx[0]].value() + 1));
          } else {
            std::vector<Term> args;
            for (auto i : idx) args.push_back(all[i]);
            all.push_back(Term::app(f, std::move(args)));
          }
        }
        if (!advance(idx, prev)) break;
      }
      if (all.size() >= n) break;
    }
    level_start = prev;
  }
  if (all.size() < n) {
    // No function symbols: continue with names of T-sentences.
    Formula s = Formula::atom("T", {all.front()});
    std::set<Term> seen(all.begin(), all.end());
    while (all.size() < n) {
      Term q = normalize_term(Term::quote(s), sig);
      if (seen.insert(q).second) all.push_back(q);
      s = Formula::atom("T", {Term::quote(s)});
    }
  }
  return all;
}

Term instance_term(const Signature& sig, std::size_t j) {
  if (sig.numerals()) return Term::numeral(j);
  return enumerate_closed_terms(sig, j + 1)[j];
}

}  // namespace mqlogic
