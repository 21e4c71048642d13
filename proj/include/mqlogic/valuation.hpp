#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "mqlogic/rational.hpp"
#include "mqlogic/signature.hpp"
#include "mqlogic/syntax.hpp"

namespace mqlogic {

enum class QuantifierMode { Sup, Sum };

std::string to_string(QuantifierMode mode);

/// Finitely many explicit atom values, per-predicate defaults and the
/// quantifier clause. Atom keys are stored in normal form.
class Valuation {
 public:
  explicit Valuation(std::shared_ptr<const Signature> sig, QuantifierMode mode = QuantifierMode::Sum);

  /// Signature lines plus `mode sum|sup`, `default P = q`, `atom A = q`,
  /// `transparent on|off`, `unknown A`, `unfold N`.
  static Valuation parse(const std::string& text);
  static Valuation load(const std::string& path);

  const Signature& signature() const { return *sig_; }
  const std::shared_ptr<const Signature>& signature_ptr() const { return sig_; }

  QuantifierMode mode() const { return mode_; }
  void set_mode(QuantifierMode mode) { mode_ = mode; }

  /// `atom` must be a closed atomic sentence.
  void set_atom(const Formula& atom, UnitValue v);
  void set_default(const std::string& predicate, UnitValue v);
  UnitValue default_for(const std::string& predicate) const;
  /// Lookup by normalized atom.
  std::optional<UnitValue> atom_value(const Formula& normalized_atom) const;
  const std::map<Formula, UnitValue>& atoms() const { return atoms_; }
  const std::map<std::string, UnitValue>& defaults() const { return defaults_; }

  bool transparent() const { return transparent_; }
  void set_transparent(bool on) { transparent_ = on; }
  std::size_t unfold_budget() const { return unfold_budget_; }
  void set_unfold_budget(std::size_t n) { unfold_budget_ = n; }

  /// The single atom whose value is left symbolic in parametric evaluation.
  const std::optional<Formula>& unknown() const { return unknown_; }
  void set_unknown(const Formula& atom);
  void clear_unknown() { unknown_.reset(); relevant_dirty_ = true; }

  /// Closed subterms of the explicit atoms and of the unknown atom.
  const std::set<Term>& relevant_terms() const;

  /// Renders the valuation-specific lines (not the signature).
  std::string render() const;

 private:
  Formula checked_atom(const Formula& atom) const;

  std::shared_ptr<const Signature> sig_;
  QuantifierMode mode_;
  std::map<Formula, UnitValue> atoms_;
  std::map<std::string, UnitValue> defaults_;
  bool transparent_ = false;
  std::size_t unfold_budget_ = 64;
  std::optional<Formula> unknown_;
  mutable std::set<Term> relevant_;
  mutable bool relevant_dirty_ = true;
};

}  // namespace mqlogic
