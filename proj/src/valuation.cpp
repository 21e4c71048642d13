#include "mqlogic/valuation.hpp"

#include <fstream>
#include <sstream>

#include "mqlogic/errors.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/rewrite.hpp"

namespace mqlogic {

std::string to_string(QuantifierMode mode) { return mode == QuantifierMode::Sum ? "sum" : "sup"; }

Valuation::Valuation(std::shared_ptr<const Signature> sig, QuantifierMode mode)
    : sig_(std::move(sig)), mode_(mode) {
  if (!sig_) throw std::invalid_argument("valuation needs a signature");
}

Formula Valuation::checked_atom(const Formula& atom) const {
  if (atom.kind() != Formula::Kind::Atom) throw SemanticError("not an atomic formula: " + to_string(atom));
  if (!atom.is_sentence()) throw SemanticError("atom is not closed: " + to_string(atom));
  return normalize_formula(atom, *sig_);
}

void Valuation::set_atom(const Formula& atom, UnitValue v) {
  atoms_[checked_atom(atom)] = std::move(v);
  relevant_dirty_ = true;
}

void Valuation::set_default(const std::string& predicate, UnitValue v) {
  if (!sig_->predicate_arity(predicate)) throw UnknownSymbolError(predicate);
  defaults_[predicate] = std::move(v);
}

UnitValue Valuation::default_for(const std::string& predicate) const {
  auto it = defaults_.find(predicate);
  return it == defaults_.end() ? UnitValue::zero() : it->second;
}

std::optional<UnitValue> Valuation::atom_value(const Formula& normalized_atom) const {
  auto it = atoms_.find(normalized_atom);
  if (it == atoms_.end()) return std::nullopt;
  return it->second;
}

void Valuation::set_unknown(const Formula& atom) {
  unknown_ = checked_atom(atom);
  relevant_dirty_ = true;
}

const std::set<Term>& Valuation::relevant_terms() const {
  if (relevant_dirty_) {
    relevant_.clear();
    for (const auto& [a, v] : atoms_) collect_closed_subterms(a, relevant_);
    if (unknown_) collect_closed_subterms(*unknown_, relevant_);
    relevant_dirty_ = false;
  }
  return relevant_;
}

namespace {

std::pair<std::string, std::string> split_assignment(const std::string& rest, std::size_t line) {
  const auto eq = rest.rfind('=');
  if (eq == std::string::npos) throw SyntaxError("line " + std::to_string(line) + ": expected '='", 0);
  return {trim(rest.substr(0, eq)), trim(rest.substr(eq + 1))};
}

UnitValue parse_unit(const std::string& text, std::size_t line) {
  try {
    return UnitValue(parse_rational(text));
  } catch (const std::exception& e) {
    throw SyntaxError("line " + std::to_string(line) + ": bad value '" + text + "' (" + e.what() + ")", 0);
  }
}

}  // namespace

Valuation Valuation::parse(const std::string& text) {
  std::vector<Signature::ExtraLine> extra;
  auto sig = std::make_shared<Signature>(Signature::parse(text, &extra));
  Valuation v(sig);
  for (const auto& [line, body] : extra) {
    const auto sp = body.find_first_of(" \t");
    const std::string kw = body.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(body.substr(sp));
    if (kw == "mode") {
      if (rest == "sum") {
        v.set_mode(QuantifierMode::Sum);
      } else if (rest == "sup") {
        v.set_mode(QuantifierMode::Sup);
      } else {
        throw SyntaxError("line " + std::to_string(line) + ": mode must be sum or sup", 0);
      }
    } else if (kw == "default") {
      auto [p, q] = split_assignment(rest, line);
      v.set_default(p, parse_unit(q, line));
    } else if (kw == "atom") {
      auto [a, q] = split_assignment(rest, line);
      v.set_atom(parse_formula(a, *sig), parse_unit(q, line));
    } else if (kw == "transparent") {
      if (rest != "on" && rest != "off") {
        throw SyntaxError("line " + std::to_string(line) + ": transparent must be on or off", 0);
      }
      v.set_transparent(rest == "on");
    } else if (kw == "unknown") {
      if (v.unknown()) throw SemanticError("line " + std::to_string(line) + ": only one unknown atom is supported");
      v.set_unknown(parse_formula(rest, *sig));
    } else if (kw == "unfold") {
      v.set_unfold_budget(std::stoul(rest));
    } else {
      throw SyntaxError("line " + std::to_string(line) + ": unknown keyword '" + kw + "'", 0);
    }
  }
  return v;
}

Valuation Valuation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string Valuation::render() const {
  std::ostringstream os;
  os << "mode " << to_string(mode_) << '\n';
  for (const auto& [p, q] : defaults_) os << "default " << p << " = " << q << '\n';
  for (const auto& [a, q] : atoms_) os << "atom " << a << " = " << q << '\n';
  if (transparent_) os << "transparent on\n";
  if (unknown_) os << "unknown " << *unknown_ << '\n';
  return os.str();
}

}  // namespace mqlogic
