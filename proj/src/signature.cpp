#include "mqlogic/signature.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "mqlogic/errors.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/rewrite.hpp"

namespace mqlogic {

namespace {

std::pair<std::string, std::size_t> split_arity(const std::string& spec, std::size_t line) {
  const auto slash = spec.find('/');
  if (slash == std::string::npos) {
    throw SignatureError("line " + std::to_string(line) + ": expected name/arity, got '" + spec + "'");
  }
  try {
    return {trim(spec.substr(0, slash)), std::stoul(spec.substr(slash + 1))};
  } catch (const std::exception&) {
    throw SignatureError("line " + std::to_string(line) + ": bad arity in '" + spec + "'");
  }
}

// Term view used for the orientation check. Numerals unfold to succ chains
// and name literals become a `quote` node over their atom arguments.
struct View {
  std::string head;
  std::vector<Term> children;
  bool is_var = false;
};

View view(const Term& t) {
  View v;
  switch (t.kind()) {
    case Term::Kind::Var:
      v.is_var = true;
      v.head = t.symbol();
      break;
    case Term::Kind::Const:
      v.head = t.symbol();
      break;
    case Term::Kind::App:
      v.head = t.symbol();
      v.children.assign(t.args().begin(), t.args().end());
      break;
    case Term::Kind::Numeral:
      if (t.value() == 0) {
        v.head = "0";
      } else {
        v.head = "succ";
        v.children.push_back(Term::numeral(t.value() - 1));
      }
      break;
    case Term::Kind::Quote:
      v.head = "quote";
      for_each_argument(t.quoted(), [&](const Term& a) { v.children.push_back(a); });
      break;
  }
  return v;
}

void heads(const Term& t, std::set<std::string>& out) {
  View v = view(t);
  if (v.is_var) return;
  out.insert(v.head);
  for (const auto& c : v.children) heads(c, out);
}

bool contains_var(const Term& t, const std::string& x) { return occurs(x, t); }

// Lexicographic path order with precedence `gt`.
bool lpo_greater(const Term& s, const Term& t, const std::function<bool(const std::string&, const std::string&)>& gt) {
  View vs = view(s);
  View vt = view(t);
  if (vs.is_var) return false;
  if (vt.is_var) return s != t && contains_var(s, vt.head);
  for (const auto& si : vs.children) {
    if (si == t || lpo_greater(si, t, gt)) return true;
  }
  auto dominates_all = [&] {
    return std::all_of(vt.children.begin(), vt.children.end(),
                       [&](const Term& tj) { return lpo_greater(s, tj, gt); });
  };
  if (gt(vs.head, vt.head)) return dominates_all();
  if (vs.head == vt.head && vs.children.size() == vt.children.size()) {
    for (std::size_t i = 0; i < vs.children.size(); ++i) {
      if (vs.children[i] == vt.children[i]) continue;
      if (!lpo_greater(vs.children[i], vt.children[i], gt)) return false;
      return dominates_all();
    }
  }
  return false;
}

void count_vars(const Term& t, std::map<std::string, int>& counts) {
  switch (t.kind()) {
    case Term::Kind::Var:
      ++counts[t.symbol()];
      break;
    case Term::Kind::App:
      for (const auto& a : t.args()) count_vars(a, counts);
      break;
    case Term::Kind::Quote:
      for_each_argument(t.quoted(), [&](const Term& a) { count_vars(a, counts); });
      break;
    default:
      break;
  }
}

}  // namespace

Signature::Signature() { predicates_.emplace_back("T", 1); }

void Signature::check_fresh(const std::string& name) const {
  if (name.empty()) throw SignatureError("empty symbol name");
  if (is_declared(name)) throw SignatureError("symbol '" + name + "' declared twice");
  if (name == "quote") throw SignatureError("'quote' is reserved");
  if (numerals_ && name == "succ") throw SignatureError("'succ' is reserved when numerals are enabled");
}

void Signature::add_constant(const std::string& name) {
  check_fresh(name);
  constants_.push_back(name);
}

void Signature::add_function(const std::string& name, std::size_t arity) {
  if (arity == 0) throw SignatureError("function '" + name + "' needs positive arity; declare a constant");
  check_fresh(name);
  functions_.emplace_back(name, arity);
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  if (name == "T") {
    if (arity != 1) throw SignatureError("the truth predicate T is unary");
    return;
  }
  check_fresh(name);
  predicates_.emplace_back(name, arity);
}

void Signature::enable_numerals() {
  if (numerals_) return;
  if (is_declared("succ")) throw SignatureError("'succ' is already declared");
  numerals_ = true;
}

bool Signature::is_constant(const std::string& name) const {
  return std::find(constants_.begin(), constants_.end(), name) != constants_.end();
}

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
  if (numerals_ && name == "succ") return 1;
  for (const auto& [f, n] : functions_) {
    if (f == name) return n;
  }
  return std::nullopt;
}

std::optional<std::size_t> Signature::predicate_arity(const std::string& name) const {
  for (const auto& [p, n] : predicates_) {
    if (p == name) return n;
  }
  return std::nullopt;
}

bool Signature::is_declared(const std::string& name) const {
  return is_constant(name) || function_arity(name).has_value() || predicate_arity(name).has_value();
}

void Signature::add_name(const std::string& constant, const Formula& sentence) {
  if (!is_constant(constant)) throw SignatureError("name constant '" + constant + "' is not declared");
  if (!sentence.is_sentence()) throw SignatureError("'" + constant + "' must name a sentence");
  if (name_to_sentence_.count(constant)) throw SignatureError("'" + constant + "' already names a sentence");
  const Formula key = normalize_formula(sentence, *this);
  if (auto it = sentence_to_name_.find(key); it != sentence_to_name_.end()) {
    throw SignatureError("sentence " + to_string(sentence) + " already has the name '" + it->second + "'");
  }
  names_.emplace_back(constant, sentence);
  name_to_sentence_.emplace(constant, sentence);
  sentence_to_name_.emplace(key, constant);
}

std::optional<Formula> Signature::named_sentence(const std::string& constant) const {
  auto it = name_to_sentence_.find(constant);
  if (it == name_to_sentence_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Signature::declared_name(const Formula& normalized) const {
  auto it = sentence_to_name_.find(normalized);
  if (it == sentence_to_name_.end()) return std::nullopt;
  return it->second;
}

void Signature::add_rule(const Term& lhs, const Term& rhs) {
  const std::string shown = to_string(lhs) + " => " + to_string(rhs);
  if (lhs.is_var()) throw SignatureError("rule " + shown + ": left side is a variable");
  std::map<std::string, int> counts;
  count_vars(lhs, counts);
  for (const auto& [v, n] : counts) {
    if (n > 1) throw SignatureError("rule " + shown + ": not left-linear in '" + v + "'");
  }
  for (const auto& v : free_vars(rhs)) {
    if (!counts.count(v)) throw SignatureError("rule " + shown + ": variable '" + v + "' missing on the left");
  }
  rules_.push_back({lhs, rhs});
  try {
    check_orientation();
  } catch (...) {
    rules_.pop_back();
    throw;
  }
}

void Signature::check_orientation() const {
  // Precedence: the head of each left side is above every symbol on its
  // right side. A cycle means no such precedence exists.
  std::map<std::string, std::set<std::string>> above;
  for (const auto& r : rules_) {
    const std::string h = view(r.lhs).head;
    std::set<std::string> hs;
    heads(r.rhs, hs);
    for (const auto& g : hs) {
      if (g != h) above[h].insert(g);
    }
  }
  std::map<std::string, std::set<std::string>> closure = above;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [f, below] : closure) {
      std::set<std::string> add;
      for (const auto& g : below) {
        if (auto it = closure.find(g); it != closure.end()) add.insert(it->second.begin(), it->second.end());
      }
      for (const auto& g : add) changed |= below.insert(g).second;
    }
  }
  for (const auto& [f, below] : closure) {
    if (below.count(f)) throw SignatureError("rewrite rules are not orientable: '" + f + "' is above itself");
  }
  auto gt = [&](const std::string& f, const std::string& g) {
    auto it = closure.find(f);
    return it != closure.end() && it->second.count(g) > 0;
  };
  for (const auto& r : rules_) {
    if (!lpo_greater(r.lhs, r.rhs, gt)) {
      throw SignatureError("rule " + to_string(r.lhs) + " => " + to_string(r.rhs) +
                           " does not decrease in the path order");
    }
  }
}

Signature Signature::parse(const std::string& text, std::vector<ExtraLine>* extra) {
  struct Pending {
    std::size_t line;
    std::string body;
  };
  Signature sig;
  std::vector<Pending> names;
  std::vector<Pending> rules;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find_first_of(" \t");
    const std::string kw = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (kw == "const") {
      std::istringstream ws(rest);
      std::string c;
      while (ws >> c) {
        if (!c.empty() && c.back() == ',') c.pop_back();
        if (!c.empty()) sig.add_constant(c);
      }
    } else if (kw == "fun" || kw == "pred") {
      std::istringstream ws(rest);
      std::string item;
      while (ws >> item) {
        if (item.back() == ',') item.pop_back();
        if (item.empty()) continue;
        auto [f, n] = split_arity(item, lineno);
        if (kw == "fun") {
          sig.add_function(f, n);
        } else {
          sig.add_predicate(f, n);
        }
      }
    } else if (kw == "numerals") {
      sig.enable_numerals();
    } else if (kw == "budget") {
      try {
        sig.set_step_budget(std::stoul(rest));
      } catch (const std::exception&) {
        throw SignatureError("line " + std::to_string(lineno) + ": bad budget '" + rest + "'");
      }
    } else if (kw == "name") {
      names.push_back({lineno, rest});
    } else if (kw == "rewrite") {
      rules.push_back({lineno, rest});
    } else if (extra) {
      extra->push_back({lineno, line});
    } else {
      throw SignatureError("line " + std::to_string(lineno) + ": unknown declaration '" + kw + "'");
    }
  }
  for (const auto& r : rules) {
    const auto arrow = r.body.find("=>");
    if (arrow == std::string::npos) {
      throw SignatureError("line " + std::to_string(r.line) + ": rewrite needs '=>'");
    }
    ParseOptions opts;
    opts.allow_free_variables = true;
    try {
      sig.add_rule(parse_term(r.body.substr(0, arrow), sig, opts), parse_term(r.body.substr(arrow + 2), sig, opts));
    } catch (const SignatureError& e) {
      throw SignatureError("line " + std::to_string(r.line) + ": " + e.what());
    }
  }
  for (const auto& n : names) {
    const auto eq = n.body.find('=');
    if (eq == std::string::npos) throw SignatureError("line " + std::to_string(n.line) + ": name needs '='");
    try {
      sig.add_name(trim(n.body.substr(0, eq)), parse_formula(n.body.substr(eq + 1), sig));
    } catch (const SignatureError& e) {
      throw SignatureError("line " + std::to_string(n.line) + ": " + e.what());
    }
  }
  return sig;
}

Signature Signature::load(const std::string& path, std::vector<ExtraLine>* extra) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), extra);
}

std::string Signature::render() const {
  std::ostringstream os;
  if (numerals_) os << "numerals\n";
  for (const auto& c : constants_) os << "const " << c << '\n';
  for (const auto& [f, n] : functions_) os << "fun " << f << '/' << n << '\n';
  for (const auto& [p, n] : predicates_) {
    if (p != "T") os << "pred " << p << '/' << n << '\n';
  }
  for (const auto& r : rules_) os << "rewrite " << r.lhs << " => " << r.rhs << '\n';
  for (const auto& [c, f] : names_) os << "name " << c << " = " << f << '\n';
  if (step_budget_ != 100000) os << "budget " << step_budget_ << '\n';
  return os.str();
}

}  // namespace mqlogic
