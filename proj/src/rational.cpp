#include "mqlogic/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mqlogic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    out = Rational(mpz_class(std::string(num)), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    out = Rational(w * scale + mpz_class(std::string(frac)), scale);
  } else {
    if (!all_digits(text)) throw std::invalid_argument("malformed rational: " + std::string(text));
    out = Rational(mpz_class(std::string(text)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

UnitValue::UnitValue(Rational q) : q_(std::move(q)) {
  q_.canonicalize();
  if (sgn(q_) < 0 || q_ > 1) throw std::out_of_range("value outside [0,1]: " + to_string(q_));
}

UnitValue UnitValue::clamp(const Rational& q) {
  if (sgn(q) <= 0) return zero();
  if (q >= 1) return one();
  return UnitValue(q);
}

std::string to_string(const UnitValue& v) { return to_string(v.value()); }

std::ostream& operator<<(std::ostream& os, const UnitValue& v) { return os << to_string(v); }

ExtendedSum ExtendedSum::finite(Rational q) {
  if (sgn(q) < 0) throw std::invalid_argument("negative summand: " + to_string(q));
  ExtendedSum s;
  s.q_ = std::move(q);
  return s;
}

ExtendedSum ExtendedSum::infinite() {
  ExtendedSum s;
  s.infinite_ = true;
  return s;
}

ExtendedSum& ExtendedSum::operator+=(const ExtendedSum& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    q_ = 0;
  } else {
    q_ += other.q_;
  }
  return *this;
}

UnitValue ExtendedSum::clamp() const {
  if (infinite_) return UnitValue::one();
  return UnitValue::clamp(q_);
}

std::string to_string(const ExtendedSum& s) { return s.is_infinite() ? "inf" : to_string(s.finite_value()); }

UnitValue weak_disjunction(const UnitValue& a, const UnitValue& b) { return a < b ? b : a; }

UnitValue strong_disjunction(const UnitValue& a, const UnitValue& b) {
  return UnitValue::clamp(a.value() + b.value());
}

UnitValue weak_conjunction(const UnitValue& a, const UnitValue& b) { return a < b ? a : b; }

UnitValue strong_conjunction(const UnitValue& a, const UnitValue& b) {
  return UnitValue::clamp(a.value() + b.value() - 1);
}

}  // namespace mqlogic
