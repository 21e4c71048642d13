#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mqlogic/signature.hpp"
#include "mqlogic/syntax.hpp"

namespace mqlogic {

/// A positive multiplicity in ω+1.
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t n);
  static Multiplicity omega() { return Multiplicity(0, true); }

  bool is_omega() const { return omega_; }
  /// Only meaningful when finite.
  std::uint64_t count() const { return n_; }

  friend Multiplicity operator+(const Multiplicity& a, const Multiplicity& b);
  friend bool operator==(const Multiplicity& a, const Multiplicity& b) = default;
  /// Finite values ordered numerically, all below ω.
  friend std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b);

 private:
  Multiplicity(std::uint64_t n, bool omega) : n_(n), omega_(omega) {}
  std::uint64_t n_ = 1;
  bool omega_ = false;
};

/// "w" or the decimal count.
std::string to_string(const Multiplicity& m);

/// Finite-support multiset of formulas with multiplicities in ω+1. Absent
/// formulas have multiplicity zero.
class OmegaMultiset {
 public:
  using Entries = std::map<Formula, Multiplicity>;

  OmegaMultiset() = default;
  OmegaMultiset(std::initializer_list<std::pair<Formula, Multiplicity>> items);

  void add(const Formula& f, Multiplicity m);
  void add(const Formula& f) { add(f, Multiplicity::finite(1)); }
  /// Removes one occurrence; ω minus one stays ω. Returns false if absent.
  bool remove_one(const Formula& f);

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  /// Structural lookup.
  std::optional<Multiplicity> multiplicity(const Formula& f) const;

  /// Keys rewritten to normal form, merging entries that become equal.
  OmegaMultiset normalized(const Signature& sig) const;

  friend bool operator==(const OmegaMultiset& a, const OmegaMultiset& b) = default;

 private:
  Entries entries_;
};

/// Pointwise multiplicity addition (the comma of sequent notation).
OmegaMultiset multiset_union(const OmegaMultiset& a, const OmegaMultiset& b);

/// Explicit members for indices 0..k-1 and one tail member for all indices
/// from k on.
struct IndexedFamily {
  std::vector<OmegaMultiset> explicit_members;
  OmegaMultiset tail;
};

/// Union over all ω indices: explicit multiplicities are summed and every
/// formula in the tail's support becomes ω.
OmegaMultiset omega_union(const IndexedFamily& family);

/// Lookup up to normalization of both sides.
std::optional<Multiplicity> multiplicity_of(const OmegaMultiset& m, const Formula& f, const Signature& sig);

struct Sequent {
  OmegaMultiset antecedent;
  OmegaMultiset succedent;

  bool is_closed() const;
  friend bool operator==(const Sequent& a, const Sequent& b) = default;
};

/// `A, B^2, C^w`
std::string to_string(const OmegaMultiset& m);
/// `A, B |- C^w`
std::string to_string(const Sequent& s);
std::ostream& operator<<(std::ostream& os, const Sequent& s);

OmegaMultiset parse_multiset(std::string_view text, const Signature& sig);
Sequent parse_sequent(std::string_view text, const Signature& sig);

/// Reads a trailing `^w` or `^n` suffix from an item, returning the stripped
/// text.
std::pair<std::string, Multiplicity> split_multiplicity(std::string_view item);

}  // namespace mqlogic
