#include "mqlogic/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqlogic {

PiecewiseLinear::PiecewiseLinear()
    : breaks_{Rational(0), Rational(1)},
      point_values_{Rational(0), Rational(0)},
      parts_{Affine{Rational(0), Rational(0)}} {}

PiecewiseLinear PiecewiseLinear::constant(const Rational& q) {
  PiecewiseLinear f;
  f.breaks_ = {Rational(0), Rational(1)};
  f.point_values_ = {q, q};
  f.parts_ = {Affine{Rational(0), q}};
  return f;
}

PiecewiseLinear PiecewiseLinear::identity() {
  PiecewiseLinear f;
  f.breaks_ = {Rational(0), Rational(1)};
  f.point_values_ = {Rational(0), Rational(1)};
  f.parts_ = {Affine{Rational(1), Rational(0)}};
  return f;
}

PiecewiseLinear PiecewiseLinear::refined(std::vector<Rational> extra) const {
  std::vector<Rational> all = breaks_;
  all.insert(all.end(), extra.begin(), extra.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() == breaks_.size()) return *this;
  PiecewiseLinear out;
  out.breaks_ = all;
  out.point_values_.clear();
  out.parts_.clear();
  std::size_t k = 0;  // index of the original interval or point
  for (std::size_t i = 0; i < all.size(); ++i) {
    while (k + 1 < breaks_.size() && breaks_[k + 1] <= all[i]) ++k;
    if (breaks_[k] == all[i]) {
      out.point_values_.push_back(point_values_[k]);
    } else {
      out.point_values_.push_back(parts_[k].at(all[i]));
    }
    if (i + 1 < all.size()) {
      // The open interval (all[i], all[i+1]) lies inside original interval k.
      out.parts_.push_back(parts_[k]);
    }
  }
  return out;
}

std::vector<Rational> PiecewiseLinear::crossings(const std::vector<Rational>& levels) const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Affine& p = parts_[i];
    if (sgn(p.a) == 0) continue;
    for (const auto& c : levels) {
      Rational v = (c - p.b) / p.a;
      if (v > breaks_[i] && v < breaks_[i + 1]) out.push_back(v);
    }
  }
  return out;
}

template <class Op>
PiecewiseLinear PiecewiseLinear::zip(const PiecewiseLinear& f, const PiecewiseLinear& g, Op op) {
  PiecewiseLinear rf = f.refined(g.breaks_);
  PiecewiseLinear rg = g.refined(f.breaks_);
  PiecewiseLinear out;
  out.breaks_ = rf.breaks_;
  out.point_values_.clear();
  out.parts_.clear();
  for (std::size_t i = 0; i < rf.point_values_.size(); ++i) {
    Affine r = op(Affine{Rational(0), rf.point_values_[i]}, Affine{Rational(0), rg.point_values_[i]});
    out.point_values_.push_back(r.b);
  }
  for (std::size_t i = 0; i < rf.parts_.size(); ++i) out.parts_.push_back(op(rf.parts_[i], rg.parts_[i]));
  return out;
}

PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return PiecewiseLinear::zip(f, g, [](const Affine& x, const Affine& y) { return Affine{x.a + y.a, x.b + y.b}; });
}

PiecewiseLinear operator-(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return PiecewiseLinear::zip(f, g, [](const Affine& x, const Affine& y) { return Affine{x.a - y.a, x.b - y.b}; });
}

PiecewiseLinear PiecewiseLinear::complement() const { return constant(Rational(1)) - *this; }

PiecewiseLinear PiecewiseLinear::clamp01() const {
  PiecewiseLinear out = refined(crossings({Rational(0), Rational(1)}));
  for (auto& q : out.point_values_) {
    if (sgn(q) < 0) q = 0;
    if (q > 1) q = 1;
  }
  for (std::size_t i = 0; i < out.parts_.size(); ++i) {
    // No crossing inside the interval, so the midpoint decides the side.
    const Rational mid = (out.breaks_[i] + out.breaks_[i + 1]) / 2;
    const Rational y = out.parts_[i].at(mid);
    if (sgn(y) <= 0) out.parts_[i] = Affine{Rational(0), Rational(0)};
    if (y >= 1) out.parts_[i] = Affine{Rational(0), Rational(1)};
  }
  return out;
}

PiecewiseLinear PiecewiseLinear::max(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  const PiecewiseLinear diff = f - g;
  std::vector<Rational> cuts = diff.crossings({Rational(0)});
  PiecewiseLinear rf = f.refined(g.breaks_).refined(cuts);
  PiecewiseLinear rg = g.refined(f.breaks_).refined(cuts);
  PiecewiseLinear out = rf;
  for (std::size_t i = 0; i < out.point_values_.size(); ++i) {
    out.point_values_[i] = mqlogic::max(rf.point_values_[i], rg.point_values_[i]);
  }
  for (std::size_t i = 0; i < out.parts_.size(); ++i) {
    const Rational mid = (out.breaks_[i] + out.breaks_[i + 1]) / 2;
    if (rg.parts_[i].at(mid) > rf.parts_[i].at(mid)) out.parts_[i] = rg.parts_[i];
  }
  return out;
}

PiecewiseLinear PiecewiseLinear::positive_indicator() const {
  PiecewiseLinear out = refined(crossings({Rational(0)}));
  for (auto& q : out.point_values_) q = sgn(q) > 0 ? 1 : 0;
  for (std::size_t i = 0; i < out.parts_.size(); ++i) {
    const Rational mid = (out.breaks_[i] + out.breaks_[i + 1]) / 2;
    out.parts_[i] = Affine{Rational(0), Rational(sgn(out.parts_[i].at(mid)) > 0 ? 1 : 0)};
  }
  return out;
}

Rational PiecewiseLinear::evaluate(const Rational& v) const {
  if (sgn(v) < 0 || v > 1) throw std::out_of_range("argument outside [0,1]");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (breaks_[i] == v) return point_values_[i];
    if (i + 1 < breaks_.size() && v < breaks_[i + 1]) {
      if (v > breaks_[i]) return parts_[i].at(v);
    }
  }
  throw std::logic_error("breakpoints do not cover [0,1]");
}

std::vector<Piece> PiecewiseLinear::pieces() const {
  std::vector<Piece> out;
  out.push_back(Piece{breaks_[0], breaks_[0], true, true, Affine{Rational(0), point_values_[0]}});
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Rational& lo = breaks_[i];
    const Rational& hi = breaks_[i + 1];
    Piece& cur = out.back();
    const Affine& p = parts_[i];
    // The open interval (lo, hi).
    if (cur.lo == cur.hi && p.at(lo) == point_values_[i]) {
      cur.hi = hi;
      cur.closed_hi = false;
      cur.f = p;
    } else if (cur.lo != cur.hi && cur.closed_hi && cur.hi == lo && cur.f == p) {
      cur.hi = hi;
      cur.closed_hi = false;
    } else {
      out.push_back(Piece{lo, hi, false, false, p});
    }
    // The breakpoint hi.
    Piece& last = out.back();
    if (last.f.at(hi) == point_values_[i + 1]) {
      last.closed_hi = true;
    } else {
      out.push_back(Piece{hi, hi, true, true, Affine{Rational(0), point_values_[i + 1]}});
    }
  }
  for (auto& pc : out) {
    // Degenerate pieces are reported as constants.
    if (pc.lo == pc.hi) pc.f = Affine{Rational(0), pc.f.at(pc.lo)};
  }
  return out;
}

std::vector<SolutionInterval> PiecewiseLinear::fixed_points() const {
  std::vector<SolutionInterval> raw;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (point_values_[i] == breaks_[i]) raw.push_back({breaks_[i], breaks_[i], true, true});
    if (i + 1 == breaks_.size()) break;
    const Affine& p = parts_[i];
    if (p.a == 1 && sgn(p.b) == 0) {
      raw.push_back({breaks_[i], breaks_[i + 1], false, false});
    } else if (p.a != 1) {
      const Rational v = p.b / (1 - p.a);
      if (v > breaks_[i] && v < breaks_[i + 1]) raw.push_back({v, v, true, true});
    }
  }
  std::vector<SolutionInterval> out;
  for (const auto& s : raw) {
    if (!out.empty()) {
      SolutionInterval& last = out.back();
      if (last.hi == s.lo && (last.closed_hi || s.closed_lo)) {
        last.hi = s.hi;
        last.closed_hi = s.closed_hi;
        continue;
      }
    }
    out.push_back(s);
  }
  return out;
}

std::string to_string(const SolutionInterval& s) {
  if (s.lo == s.hi) return "{" + to_string(s.lo) + "}";
  return std::string(s.closed_lo ? "[" : "(") + to_string(s.lo) + "," + to_string(s.hi) + (s.closed_hi ? "]" : ")");
}

}  // namespace mqlogic
