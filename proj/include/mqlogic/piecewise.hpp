#pragma once

#include <string>
#include <vector>

#include "mqlogic/rational.hpp"

namespace mqlogic {

struct Affine {
  Rational a;  // slope
  Rational b;  // intercept
  Rational at(const Rational& v) const { return a * v + b; }
  friend bool operator==(const Affine& x, const Affine& y) { return x.a == y.a && x.b == y.b; }
};

/// One maximal piece of a piecewise-affine function on [0,1].
struct Piece {
  Rational lo;
  Rational hi;
  bool closed_lo = true;
  bool closed_hi = true;
  Affine f;
  friend bool operator==(const Piece& x, const Piece& y) = default;
};

/// A closed, open or half-open solution interval; a point when lo == hi.
struct SolutionInterval {
  Rational lo;
  Rational hi;
  bool closed_lo = true;
  bool closed_hi = true;
  friend bool operator==(const SolutionInterval& x, const SolutionInterval& y) = default;
};

/// Exact piecewise-affine function of one variable v on [0,1]. Breakpoints
/// 0 = b0 < ... < bn = 1 carry their own values, so isolated points are
/// represented exactly.
class PiecewiseLinear {
 public:
  /// The zero function.
  PiecewiseLinear();
  static PiecewiseLinear constant(const Rational& q);
  static PiecewiseLinear identity();

  PiecewiseLinear complement() const;  // 1 - f
  friend PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g);
  friend PiecewiseLinear operator-(const PiecewiseLinear& f, const PiecewiseLinear& g);
  /// min{1, max{0, f}}, splitting pieces where f crosses 0 or 1.
  PiecewiseLinear clamp01() const;
  static PiecewiseLinear max(const PiecewiseLinear& f, const PiecewiseLinear& g);
  /// 1 where f > 0, 0 elsewhere.
  PiecewiseLinear positive_indicator() const;

  Rational evaluate(const Rational& v) const;
  /// Maximal pieces, merging adjacent parts that agree.
  std::vector<Piece> pieces() const;
  /// {v : f(v) = v}, as disjoint intervals in increasing order.
  std::vector<SolutionInterval> fixed_points() const;

  friend bool operator==(const PiecewiseLinear& f, const PiecewiseLinear& g) { return f.pieces() == g.pieces(); }

 private:
  /// Same function with extra breakpoints inserted.
  PiecewiseLinear refined(std::vector<Rational> extra) const;
  /// Breakpoints where some interval's affine part takes one of `levels`.
  std::vector<Rational> crossings(const std::vector<Rational>& levels) const;
  template <class Op>
  static PiecewiseLinear zip(const PiecewiseLinear& f, const PiecewiseLinear& g, Op op);

  std::vector<Rational> breaks_;
  std::vector<Rational> point_values_;  // one per breakpoint
  std::vector<Affine> parts_;           // one per open interval
};

std::string to_string(const SolutionInterval& s);

}  // namespace mqlogic
