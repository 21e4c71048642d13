#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace mqlogic {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal such as "0.6" into an exact
/// canonical rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" in lowest terms, or "n" when the denominator is 1.
std::string to_string(const Rational& q);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// An exact value in [0,1].
class UnitValue {
 public:
  UnitValue() = default;
  /// Throws std::out_of_range if q is outside [0,1].
  explicit UnitValue(Rational q);

  static UnitValue zero() { return UnitValue(); }
  static UnitValue one() { return UnitValue(Rational(1)); }
  /// min{1, max{0, q}}
  static UnitValue clamp(const Rational& q);

  const Rational& value() const { return q_; }
  UnitValue complement() const { return UnitValue(Rational(1 - q_)); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  friend bool operator==(const UnitValue& a, const UnitValue& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const UnitValue& a, const UnitValue& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational q_{0};
};

std::string to_string(const UnitValue& v);
std::ostream& operator<<(std::ostream& os, const UnitValue& v);

/// A nonnegative sum that may diverge. Used for the series in sequent and
/// quantifier clauses.
class ExtendedSum {
 public:
  ExtendedSum() = default;
  static ExtendedSum finite(Rational q);
  static ExtendedSum infinite();

  bool is_infinite() const { return infinite_; }
  /// Only meaningful when finite.
  const Rational& finite_value() const { return q_; }

  ExtendedSum& operator+=(const ExtendedSum& other);
  friend ExtendedSum operator+(ExtendedSum a, const ExtendedSum& b) { return a += b; }

  /// min{1, sum}, with an infinite sum mapped to 1.
  UnitValue clamp() const;

  friend bool operator==(const ExtendedSum& a, const ExtendedSum& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.q_ == b.q_);
  }

 private:
  Rational q_{0};
  bool infinite_ = false;
};

std::string to_string(const ExtendedSum& s);

// Clauses for the connectives that are not part of the object language.
// They are kept for comparison with the quantifier and sequent clauses.
UnitValue weak_disjunction(const UnitValue& a, const UnitValue& b);
UnitValue strong_disjunction(const UnitValue& a, const UnitValue& b);
UnitValue weak_conjunction(const UnitValue& a, const UnitValue& b);
UnitValue strong_conjunction(const UnitValue& a, const UnitValue& b);

}  // namespace mqlogic
