#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mqlogic {

class Formula;

/// Immutable first-order term. Copies share structure.
///
/// `Quote` is a name literal: the canonical name of the quoted sentence when
/// no declared constant names it. Numerals are native nodes; `succ` is the
/// builtin successor over them.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, App, Numeral, Quote };

  static Term var(std::string name);
  static Term constant(std::string name);
  static Term app(std::string function, std::vector<Term> args);
  static Term numeral(std::uint64_t value);
  static Term quote(Formula sentence);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  /// Variable name, constant symbol or function symbol.
  const std::string& symbol() const;
  std::span<const Term> args() const;
  std::uint64_t value() const;
  const Formula& quoted() const;

  bool is_closed() const;
  std::size_t depth() const;
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Immutable formula over the connectives ~, -> and the existential quantifier.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Neg, Cond, Exists };

  static Formula atom(std::string predicate, std::vector<Term> args);
  static Formula neg(Formula operand);
  static Formula cond(Formula antecedent, Formula consequent);
  static Formula exists(std::string variable, Formula body);

  Kind kind() const;
  /// Predicate symbol (Atom) or bound variable (Exists).
  const std::string& symbol() const;
  std::span<const Term> args() const;
  /// Operand of Neg, body of Exists, antecedent of Cond.
  const Formula& left() const;
  /// Consequent of Cond.
  const Formula& right() const;

  bool is_sentence() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Formula& f);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
bool occurs_free(std::string_view x, const Formula& f);
bool occurs(std::string_view x, const Term& t);

/// Replaces every free occurrence of x by t. Terms inside name literals are
/// treated as ordinary positions. Throws std::invalid_argument if a variable
/// of t would be captured by a binder of f.
Formula substitute(const Formula& f, std::string_view x, const Term& t);
Term substitute(const Term& s, std::string_view x, const Term& t);

/// Maps every term position of f (atom arguments, recursively including name
/// literals' sentences) through fn, rebuilding the formula.
Formula map_terms(const Formula& f, const std::function<Term(const Term&)>& fn);

/// Calls fn on every atom argument of f (not recursing into subterms).
void for_each_argument(const Formula& f, const std::function<void(const Term&)>& fn);

/// Every closed subterm of t or f, including t itself.
void collect_closed_subterms(const Term& t, std::set<Term>& out);
void collect_closed_subterms(const Formula& f, std::set<Term>& out);

/// Variables bound by some quantifier inside f.
std::set<std::string> bound_vars(const Formula& f);

std::size_t formula_depth(const Formula& f);

}  // namespace mqlogic

template <>
struct std::hash<mqlogic::Term> {
  std::size_t operator()(const mqlogic::Term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<mqlogic::Formula> {
  std::size_t operator()(const mqlogic::Formula& f) const noexcept { return f.hash(); }
};
