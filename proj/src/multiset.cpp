#include "mqlogic/multiset.hpp"

#include <sstream>
#include <stdexcept>

#include "mqlogic/errors.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/rewrite.hpp"

namespace mqlogic {

Multiplicity Multiplicity::finite(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("multiplicity must be positive");
  return Multiplicity(n, false);
}

Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
  if (a.omega_ || b.omega_) return Multiplicity::omega();
  return Multiplicity::finite(a.n_ + b.n_);
}

std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b) {
  if (a.omega_ != b.omega_) return a.omega_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.omega_) return std::strong_ordering::equal;
  return a.n_ <=> b.n_;
}

std::string to_string(const Multiplicity& m) { return m.is_omega() ? "w" : std::to_string(m.count()); }

OmegaMultiset::OmegaMultiset(std::initializer_list<std::pair<Formula, Multiplicity>> items) {
  for (const auto& [f, m] : items) add(f, m);
}

void OmegaMultiset::add(const Formula& f, Multiplicity m) {
  auto [it, inserted] = entries_.emplace(f, m);
  if (!inserted) it->second = it->second + m;
}

bool OmegaMultiset::remove_one(const Formula& f) {
  auto it = entries_.find(f);
  if (it == entries_.end()) return false;
  if (it->second.is_omega()) return true;
  if (it->second.count() == 1) {
    entries_.erase(it);
  } else {
    it->second = Multiplicity::finite(it->second.count() - 1);
  }
  return true;
}

std::optional<Multiplicity> OmegaMultiset::multiplicity(const Formula& f) const {
  auto it = entries_.find(f);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

OmegaMultiset OmegaMultiset::normalized(const Signature& sig) const {
  OmegaMultiset out;
  for (const auto& [f, m] : entries_) out.add(normalize_formula(f, sig), m);
  return out;
}

OmegaMultiset multiset_union(const OmegaMultiset& a, const OmegaMultiset& b) {
  OmegaMultiset out = a;
  for (const auto& [f, m] : b.entries()) out.add(f, m);
  return out;
}

OmegaMultiset omega_union(const IndexedFamily& family) {
  OmegaMultiset out;
  for (const auto& member : family.explicit_members) out = multiset_union(out, member);
  for (const auto& [f, m] : family.tail.entries()) out.add(f, Multiplicity::omega());
  return out;
}

std::optional<Multiplicity> multiplicity_of(const OmegaMultiset& m, const Formula& f, const Signature& sig) {
  const Formula key = normalize_formula(f, sig);
  std::optional<Multiplicity> total;
  for (const auto& [g, k] : m.entries()) {
    if (normalize_formula(g, sig) == key) total = total ? *total + k : k;
  }
  return total;
}

bool Sequent::is_closed() const {
  for (const auto* side : {&antecedent, &succedent}) {
    for (const auto& [f, m] : side->entries()) {
      if (!f.is_sentence()) return false;
    }
  }
  return true;
}

std::string to_string(const OmegaMultiset& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, k] : m.entries()) {
    if (!first) os << ", ";
    first = false;
    const bool wrap = f.kind() == Formula::Kind::Cond;
    if (wrap) os << '(';
    os << f;
    if (wrap) os << ')';
    if (k.is_omega() || k.count() > 1) os << '^' << to_string(k);
  }
  return os.str();
}

std::string to_string(const Sequent& s) {
  std::string a = to_string(s.antecedent);
  std::string b = to_string(s.succedent);
  std::string out = a.empty() ? "|-" : a + " |-";
  if (!b.empty()) out += " " + b;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << to_string(s); }

std::pair<std::string, Multiplicity> split_multiplicity(std::string_view item) {
  std::string text = trim(item);
  const auto caret = text.rfind('^');
  if (caret == std::string::npos || text.find_first_of(")}", caret) != std::string::npos) {
    return {text, Multiplicity::finite(1)};
  }
  const std::string suffix = trim(text.substr(caret + 1));
  std::string body = trim(text.substr(0, caret));
  if (suffix == "w" || suffix == "omega") return {body, Multiplicity::omega()};
  try {
    std::size_t used = 0;
    const auto n = std::stoull(suffix, &used);
    if (used != suffix.size() || n == 0) throw std::invalid_argument(suffix);
    return {body, Multiplicity::finite(n)};
  } catch (const std::exception&) {
    throw SyntaxError("bad multiplicity '^" + suffix + "'", caret);
  }
}

OmegaMultiset parse_multiset(std::string_view text, const Signature& sig) {
  OmegaMultiset out;
  for (const auto& item : split_top_level(text, ',')) {
    if (item.empty()) throw SyntaxError("empty multiset item", 0);
    auto [body, m] = split_multiplicity(item);
    out.add(parse_formula(body, sig), m);
  }
  return out;
}

Sequent parse_sequent(std::string_view text, const Signature& sig) {
  const auto turnstile = find_top_level(text, "|-");
  if (turnstile == std::string_view::npos) throw SyntaxError("sequent needs '|-'", 0);
  Sequent s;
  s.antecedent = parse_multiset(text.substr(0, turnstile), sig);
  s.succedent = parse_multiset(text.substr(turnstile + 2), sig);
  return s;
}

}  // namespace mqlogic
