#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mqlogic/multiset.hpp"
#include "mqlogic/signature.hpp"
#include "mqlogic/syntax.hpp"

namespace mqlogic {

enum class RuleId { Init, NegL, NegR, CondL, CondR, ExistsL, ExistsR, TL, TR };

/// "Init", "NegL", ..., "ExistsLw", "ExistsRw", "TL", "TR".
std::string to_string(RuleId r);
std::optional<RuleId> rule_from_string(std::string_view s);

/// How ∃ rules treat a variable that does not occur in the body:
/// Multiplicative keeps the ω-fold premise family, Additive takes one instance.
enum class VacuousPolicy { Multiplicative, Additive };

std::string to_string(VacuousPolicy p);

enum class Side { Ant, Suc };

/// The ω-multiset {pattern[t_j/var] : j >= start}, each member with
/// multiplicity `mult`, where t_j is the j-th instance term.
struct FamilySegment {
  Formula pattern;
  std::string var;
  std::uint64_t start = 0;
  Multiplicity mult = Multiplicity::finite(1);

  friend bool operator==(const FamilySegment& a, const FamilySegment& b) = default;
};

/// One side of a sequent that may contain infinitely many distinct formulas.
struct SchematicSide {
  OmegaMultiset plain;
  std::vector<FamilySegment> segments;

  bool empty() const { return plain.empty() && segments.empty(); }
  friend bool operator==(const SchematicSide& a, const SchematicSide& b) = default;
};

struct SchematicSequent {
  SchematicSide ant;
  SchematicSide suc;

  static SchematicSequent from(const Sequent& s);
  bool has_segments() const { return !ant.segments.empty() || !suc.segments.empty(); }
  /// Throws std::logic_error if a side has segments.
  Sequent to_sequent() const;
  const SchematicSide& side(Side s) const { return s == Side::Ant ? ant : suc; }
  SchematicSide& side(Side s) { return s == Side::Ant ? ant : suc; }

  friend bool operator==(const SchematicSequent& a, const SchematicSequent& b) = default;
};

/// Segments print as `{pattern | var>=start}` with an optional `^m`.
std::string to_string(const SchematicSide& s);
std::string to_string(const SchematicSequent& s);
/// Like parse_sequent, also accepting segments; free variables are allowed.
SchematicSequent parse_schematic_sequent(std::string_view text, const Signature& sig);
FamilySegment parse_segment(std::string_view text, const Signature& sig);

/// Member j of a segment, in normal form.
Formula segment_member(const FamilySegment& seg, std::uint64_t j, const Signature& sig);

/// Canonical representative: normalized formulas, segment index renamed,
/// numeral-indexed segments re-indexed to start at 0, index-free segments
/// turned into ω entries, equal segments merged.
SchematicSide canonical(const SchematicSide& s, const Signature& sig);
SchematicSequent canonical(const SchematicSequent& s, const Signature& sig);

SchematicSide side_union(const SchematicSide& a, const SchematicSide& b);

/// Removes one occurrence of f (a plain entry or a segment member within a
/// bounded window past the start). Returns nullopt if f is absent.
std::optional<SchematicSide> remove_occurrence(const SchematicSide& s, const Formula& f, const Signature& sig);

enum class VerdictKind { Pass, ShapeMismatch, MultiplicityMismatch, FamilyMismatch, NamingViolation, PremiseCount };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Pass;
  std::string message;

  bool ok() const { return kind == VerdictKind::Pass; }
  static Verdict pass() { return {}; }
  static Verdict fail(VerdictKind k, std::string msg) { return {k, std::move(msg)}; }
};

/// Equality as ω-multisets. Segments are lined up by peeling off up to 64
/// leading members, so {F(succ n) | n>=0} equals {F(n) | n>=1}. `same_shape`
/// reports whether only multiplicities differ.
bool sides_equivalent(const SchematicSide& a, const SchematicSide& b, const Signature& sig, bool* same_shape = nullptr);
/// Pass, or a shape or multiplicity mismatch naming both sequents.
Verdict compare_sequents(const SchematicSequent& expected, const SchematicSequent& found, const Signature& sig);

struct Principal {
  Side side;
  Formula formula;
};

/// What the ∃L check needs to know about a premise family: the conclusions of
/// the explicit members and the template conclusion, in which `var` stands for
/// the instance index.
struct FamilySummary {
  std::string var;
  std::uint64_t start = 0;
  std::vector<SchematicSequent> explicit_conclusions;
  SchematicSequent template_conclusion;
};

/// Checks one inference. Without a principal the checker tries every formula
/// of the right shape on the rule's side.
Verdict check_instance(RuleId rule, const std::vector<SchematicSequent>& premises, const FamilySummary* family,
                       const SchematicSequent& conclusion, VacuousPolicy policy, const Signature& sig,
                       const std::optional<Principal>& principal = std::nullopt);

struct UniformFamily;

/// A derivation tree. A node flagged `previous_member` is a leaf that only
/// occurs inside a family template; it stands for the member with the
/// preceding index, so a template can build member n from member n-1.
struct Derivation {
  SchematicSequent conclusion;
  RuleId rule = RuleId::Init;
  std::vector<Derivation> premises;
  std::shared_ptr<const UniformFamily> family;
  std::optional<Principal> principal;
  bool previous_member = false;

  static Derivation node(RuleId rule, SchematicSequent conclusion, std::vector<Derivation> premises = {});
  static Derivation previous();
};

/// ω premises: explicit derivations for indices 0..start-1 and a template
/// for every index n >= start, with `var` standing for the index.
struct UniformFamily {
  std::string var;
  std::uint64_t start = 0;
  Derivation tmpl;
  std::vector<Derivation> explicit_members;
};

Derivation with_family(Derivation d, UniformFamily family);

/// Substitutes `term` for the free variable `var` throughout a derivation,
/// leaving nested families and segments that rebind `var` alone.
Derivation instantiate(const Derivation& d, const std::string& var, const Term& term);

struct NodeReport {
  std::string path;
  std::string rule;
  SchematicSequent sequent;
  Verdict verdict;
};

struct SpotCheck {
  std::string path;
  std::uint64_t index;
  Verdict verdict;
};

struct CheckReport {
  bool ok = true;
  std::vector<NodeReport> nodes;
  std::vector<SpotCheck> family_spot_checks;
  VacuousPolicy policy = VacuousPolicy::Multiplicative;
  std::size_t depth = 0;
  /// Set when some family was verified only at finitely many indices.
  bool bounded = false;
  std::string failed_path;
};

/// Checks every node in pre-order and stops at the first failure. Families
/// are checked through their template conclusion and by instantiating the
/// template at start..start+depth-1.
CheckReport check_derivation(const Derivation& d, VacuousPolicy policy, std::size_t depth, const Signature& sig);

}  // namespace mqlogic
