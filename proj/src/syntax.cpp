#include "mqlogic/syntax.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace mqlogic {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::strong_ordering compare_strings(const std::string& a, const std::string& b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

template <class T>
std::strong_ordering compare_ranges(std::span<const T> a, std::span<const T> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

struct Term::Node {
  Kind kind{};
  std::string symbol;
  std::vector<Term> args;
  std::uint64_t value = 0;
  std::shared_ptr<const Formula> quoted;
  std::size_t hash = 0;
  std::size_t depth = 0;
  bool closed = true;
};

struct Formula::Node {
  Kind kind{};
  std::string symbol;
  std::vector<Term> args;
  std::vector<Formula> children;
  std::vector<std::string> free;  // sorted
  std::size_t hash = 0;
};

// ---------------------------------------------------------------------------
// Term

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->symbol = std::move(name);
  n->closed = false;
  return Term(std::move(n));
}

Term Term::constant(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->hash = mix(2, std::hash<std::string>{}(name));
  n->symbol = std::move(name);
  return Term(std::move(n));
}

Term Term::app(std::string function, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  std::size_t h = mix(3, std::hash<std::string>{}(function));
  std::size_t d = 0;
  for (const auto& a : args) {
    h = mix(h, a.hash());
    d = std::max(d, a.depth());
    n->closed = n->closed && a.is_closed();
  }
  n->hash = h;
  n->depth = d + 1;
  n->symbol = std::move(function);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::numeral(std::uint64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Numeral;
  n->value = value;
  n->hash = mix(4, std::hash<std::uint64_t>{}(value));
  // A numeral abbreviates succ^value(0).
  n->depth = static_cast<std::size_t>(value);
  return Term(std::move(n));
}

Term Term::quote(Formula sentence) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quote;
  n->hash = mix(5, sentence.hash());
  n->closed = sentence.is_sentence();
  n->depth = 1;
  n->quoted = std::make_shared<const Formula>(std::move(sentence));
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::args() const { return node_->args; }
std::uint64_t Term::value() const { return node_->value; }

const Formula& Term::quoted() const {
  if (node_->kind != Kind::Quote) throw std::logic_error("term is not a name literal");
  return *node_->quoted;
}

bool Term::is_closed() const { return node_->closed; }
std::size_t Term::depth() const { return node_->depth; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return compare_strings(a.symbol(), b.symbol());
    case Term::Kind::App:
      if (auto c = compare_strings(a.symbol(), b.symbol()); c != 0) return c;
      return compare_ranges(a.args(), b.args());
    case Term::Kind::Numeral:
      return a.value() <=> b.value();
    case Term::Kind::Quote:
      return a.quoted() <=> b.quoted();
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Formula

namespace {

std::vector<std::string> merge_free(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  std::size_t h = mix(11, std::hash<std::string>{}(predicate));
  std::set<std::string> fv;
  for (const auto& a : args) {
    h = mix(h, a.hash());
    if (!a.is_closed()) {
      auto more = free_vars(a);
      fv.insert(more.begin(), more.end());
    }
  }
  n->hash = h;
  n->free.assign(fv.begin(), fv.end());
  n->symbol = std::move(predicate);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->hash = mix(12, operand.hash());
  n->free = operand.node_->free;
  n->children.push_back(std::move(operand));
  return Formula(std::move(n));
}

Formula Formula::cond(Formula antecedent, Formula consequent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cond;
  n->hash = mix(mix(13, antecedent.hash()), consequent.hash());
  n->free = merge_free(antecedent.node_->free, consequent.node_->free);
  n->children.push_back(std::move(antecedent));
  n->children.push_back(std::move(consequent));
  return Formula(std::move(n));
}

Formula Formula::exists(std::string variable, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->hash = mix(mix(14, std::hash<std::string>{}(variable)), body.hash());
  n->free = body.node_->free;
  n->free.erase(std::remove(n->free.begin(), n->free.end(), variable), n->free.end());
  n->symbol = std::move(variable);
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::symbol() const { return node_->symbol; }
std::span<const Term> Formula::args() const { return node_->args; }

const Formula& Formula::left() const {
  if (node_->children.empty()) throw std::logic_error("atomic formula has no subformula");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->kind != Kind::Cond) throw std::logic_error("formula is not a conditional");
  return node_->children[1];
}

bool Formula::is_sentence() const { return node_->free.empty(); }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = compare_strings(a.symbol(), b.symbol()); c != 0) return c;
  if (auto c = compare_ranges(a.args(), b.args()); c != 0) return c;
  return compare_ranges(std::span<const Formula>(a.node_->children), std::span<const Formula>(b.node_->children));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print(std::ostream& os, const Formula& f);

void print(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      os << t.symbol();
      break;
    case Term::Kind::Numeral:
      os << t.value();
      break;
    case Term::Kind::App: {
      os << t.symbol() << '(';
      bool first = true;
      for (const auto& a : t.args()) {
        if (!first) os << ',';
        first = false;
        print(os, a);
      }
      os << ')';
      break;
    }
    case Term::Kind::Quote:
      os << "quote(";
      print(os, t.quoted());
      os << ')';
      break;
  }
}

void print_unary(std::ostream& os, const Formula& f) {
  if (f.kind() == Formula::Kind::Cond) {
    os << '(';
    print(os, f);
    os << ')';
  } else {
    print(os, f);
  }
}

void print(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      os << f.symbol();
      if (!f.args().empty()) {
        os << '(';
        bool first = true;
        for (const auto& a : f.args()) {
          if (!first) os << ',';
          first = false;
          print(os, a);
        }
        os << ')';
      }
      break;
    case Formula::Kind::Neg:
      os << '~';
      print_unary(os, f.left());
      break;
    case Formula::Kind::Exists:
      os << "Ex " << f.symbol() << ' ';
      print_unary(os, f.left());
      break;
    case Formula::Kind::Cond:
      print_unary(os, f.left());
      os << " -> ";
      print(os, f.right());
      break;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f);
  return os;
}

// ---------------------------------------------------------------------------
// Variables and substitution

namespace {

void collect_free(const Term& t, std::set<std::string>& out) {
  if (t.is_closed()) return;
  switch (t.kind()) {
    case Term::Kind::Var:
      out.insert(t.symbol());
      break;
    case Term::Kind::App:
      for (const auto& a : t.args()) collect_free(a, out);
      break;
    case Term::Kind::Quote: {
      auto inner = free_vars(t.quoted());
      out.insert(inner.begin(), inner.end());
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& a : f.args()) collect_free(a, out);
      break;
    case Formula::Kind::Neg:
      out = free_vars(f.left());
      break;
    case Formula::Kind::Cond: {
      out = free_vars(f.left());
      auto r = free_vars(f.right());
      out.insert(r.begin(), r.end());
      break;
    }
    case Formula::Kind::Exists:
      out = free_vars(f.left());
      out.erase(f.symbol());
      break;
  }
  return out;
}

bool occurs(std::string_view x, const Term& t) {
  if (t.is_closed()) return false;
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.symbol() == x;
    case Term::Kind::App:
      return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return occurs(x, a); });
    case Term::Kind::Quote:
      return occurs_free(x, t.quoted());
    default:
      return false;
  }
}

bool occurs_free(std::string_view x, const Formula& f) {
  if (f.is_sentence()) return false;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return std::any_of(f.args().begin(), f.args().end(), [&](const Term& a) { return occurs(x, a); });
    case Formula::Kind::Neg:
      return occurs_free(x, f.left());
    case Formula::Kind::Cond:
      return occurs_free(x, f.left()) || occurs_free(x, f.right());
    case Formula::Kind::Exists:
      return f.symbol() != x && occurs_free(x, f.left());
  }
  return false;
}

Term substitute(const Term& s, std::string_view x, const Term& t) {
  if (!occurs(x, s)) return s;
  switch (s.kind()) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(s.args().size());
      for (const auto& a : s.args()) args.push_back(substitute(a, x, t));
      return Term::app(s.symbol(), std::move(args));
    }
    case Term::Kind::Quote:
      return Term::quote(substitute(s.quoted(), x, t));
    default:
      return s;
  }
}

Formula substitute(const Formula& f, std::string_view x, const Term& t) {
  if (!occurs_free(x, f)) return f;
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(substitute(a, x, t));
      return Formula::atom(f.symbol(), std::move(args));
    }
    case Formula::Kind::Neg:
      return Formula::neg(substitute(f.left(), x, t));
    case Formula::Kind::Cond:
      return Formula::cond(substitute(f.left(), x, t), substitute(f.right(), x, t));
    case Formula::Kind::Exists:
      if (!t.is_closed() && occurs(f.symbol(), t)) {
        throw std::invalid_argument("substituting " + to_string(t) + " for " + std::string(x) + " in " +
                                    to_string(f) + " would capture " + f.symbol());
      }
      return Formula::exists(f.symbol(), substitute(f.left(), x, t));
  }
  return f;
}

Formula map_terms(const Formula& f, const std::function<Term(const Term&)>& fn) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(fn(a));
      return Formula::atom(f.symbol(), std::move(args));
    }
    case Formula::Kind::Neg:
      return Formula::neg(map_terms(f.left(), fn));
    case Formula::Kind::Cond:
      return Formula::cond(map_terms(f.left(), fn), map_terms(f.right(), fn));
    case Formula::Kind::Exists:
      return Formula::exists(f.symbol(), map_terms(f.left(), fn));
  }
  return f;
}

void for_each_argument(const Formula& f, const std::function<void(const Term&)>& fn) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& a : f.args()) fn(a);
      break;
    case Formula::Kind::Neg:
    case Formula::Kind::Exists:
      for_each_argument(f.left(), fn);
      break;
    case Formula::Kind::Cond:
      for_each_argument(f.left(), fn);
      for_each_argument(f.right(), fn);
      break;
  }
}

void collect_closed_subterms(const Term& t, std::set<Term>& out) {
  if (t.is_closed()) out.insert(t);
  if (t.kind() == Term::Kind::App) {
    for (const auto& a : t.args()) collect_closed_subterms(a, out);
  }
}

void collect_closed_subterms(const Formula& f, std::set<Term>& out) {
  for_each_argument(f, [&](const Term& t) { collect_closed_subterms(t, out); });
}

std::set<std::string> bound_vars(const Formula& f) {
  std::set<std::string> out;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      break;
    case Formula::Kind::Neg:
      out = bound_vars(f.left());
      break;
    case Formula::Kind::Cond: {
      out = bound_vars(f.left());
      auto r = bound_vars(f.right());
      out.insert(r.begin(), r.end());
      break;
    }
    case Formula::Kind::Exists:
      out = bound_vars(f.left());
      out.insert(f.symbol());
      break;
  }
  return out;
}

std::size_t formula_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return 0;
    case Formula::Kind::Neg:
    case Formula::Kind::Exists:
      return 1 + formula_depth(f.left());
    case Formula::Kind::Cond:
      return 1 + std::max(formula_depth(f.left()), formula_depth(f.right()));
  }
  return 0;
}

}  // namespace mqlogic
