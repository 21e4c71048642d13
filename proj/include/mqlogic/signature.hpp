#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mqlogic/syntax.hpp"

namespace mqlogic {

struct RewriteRule {
  Term lhs;
  Term rhs;
};

/// Declared symbols, canonical names and coding equations.
///
/// The truth predicate T/1 is always present. With numerals enabled the
/// builtin successor `succ/1` and the numerals 0,1,2,... are closed terms.
class Signature {
 public:
  Signature();

  /// One line of a signature file that the signature itself did not consume.
  struct ExtraLine {
    std::size_t number;
    std::string text;
  };

  /// Parses the line-based format (`const`, `fun`, `pred`, `name`, `rewrite`,
  /// `numerals`, `budget`, `#` comments). Lines with other keywords are an
  /// error unless `extra` is given, in which case they are handed back.
  static Signature parse(const std::string& text, std::vector<ExtraLine>* extra = nullptr);
  static Signature load(const std::string& path, std::vector<ExtraLine>* extra = nullptr);

  void add_constant(const std::string& name);
  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);
  void enable_numerals();
  /// Registers `constant` as the canonical name of `sentence`. Both directions
  /// must stay injective.
  void add_name(const std::string& constant, const Formula& sentence);
  /// Validates left-linearity, variable containment and orientation.
  void add_rule(const Term& lhs, const Term& rhs);
  void set_step_budget(std::size_t budget) { step_budget_ = budget; }

  const std::vector<std::string>& constants() const { return constants_; }
  const std::vector<std::pair<std::string, std::size_t>>& functions() const { return functions_; }
  const std::vector<std::pair<std::string, std::size_t>>& predicates() const { return predicates_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool numerals() const { return numerals_; }
  std::size_t step_budget() const { return step_budget_; }

  bool is_constant(const std::string& name) const;
  std::optional<std::size_t> function_arity(const std::string& name) const;
  std::optional<std::size_t> predicate_arity(const std::string& name) const;
  bool is_declared(const std::string& name) const;

  bool has_naming_scheme() const { return !names_.empty(); }
  const std::vector<std::pair<std::string, Formula>>& names() const { return names_; }
  /// The sentence a declared name constant stands for.
  std::optional<Formula> named_sentence(const std::string& constant) const;
  /// The declared constant naming `normalized`, which must already be in
  /// normal form.
  std::optional<std::string> declared_name(const Formula& normalized) const;

  /// Renders the signature in the file format accepted by parse().
  std::string render() const;

 private:
  void check_fresh(const std::string& name) const;
  void check_orientation() const;

  std::vector<std::string> constants_;
  std::vector<std::pair<std::string, std::size_t>> functions_;
  std::vector<std::pair<std::string, std::size_t>> predicates_;
  std::vector<std::pair<std::string, Formula>> names_;
  std::map<std::string, Formula> name_to_sentence_;
  std::map<Formula, std::string> sentence_to_name_;
  std::vector<RewriteRule> rules_;
  bool numerals_ = false;
  std::size_t step_budget_ = 100000;
};

}  // namespace mqlogic
