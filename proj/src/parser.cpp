#include "mqlogic/parser.hpp"

#include <cctype>
#include <vector>

#include "mqlogic/errors.hpp"

namespace mqlogic {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Tilde, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      const std::size_t b = i;
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(b, i - b)), b});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t b = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(b, i - b)), b});
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i++});
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", i++});
    } else if (c == '~') {
      out.push_back({Tok::Tilde, "~", i++});
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", i});
      i += 2;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, const ParseOptions& opts)
      : toks_(lex(text)), sig_(sig), opts_(opts) {}

  Formula formula() {
    Formula lhs = unary();
    if (peek().kind == Tok::Arrow) {
      ++at_;
      return Formula::cond(std::move(lhs), formula());
    }
    return lhs;
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++at_;
      if (!sig_.numerals()) throw UnknownSymbolError(t.text);
      return Term::numeral(std::stoull(t.text));
    }
    if (t.kind != Tok::Ident) throw SyntaxError("expected a term", t.pos);
    ++at_;
    const std::string& name = t.text;
    if (name == "quote" && peek().kind == Tok::LParen) {
      ++at_;
      Formula inner = formula();
      expect(Tok::RParen, "')'");
      return Term::quote(std::move(inner));
    }
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == name) return Term::var(name);
    }
    if (sig_.is_constant(name)) return Term::constant(name);
    if (auto arity = sig_.function_arity(name)) {
      auto args = arguments(name, *arity, t.pos);
      return Term::app(name, std::move(args));
    }
    if (sig_.predicate_arity(name)) throw SyntaxError("predicate '" + name + "' used as a term", t.pos);
    if (opts_.allow_free_variables) return Term::var(name);
    throw UnknownSymbolError(name);
  }

  void finish() {
    if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(at_ + k, toks_.size() - 1)];
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw SyntaxError(std::string("expected ") + what, peek().pos);
    ++at_;
  }

  std::vector<Term> arguments(const std::string& head, std::size_t arity, std::size_t pos) {
    std::vector<Term> args;
    if (arity == 0) {
      if (peek().kind == Tok::LParen && peek(1).kind == Tok::RParen) at_ += 2;
      return args;
    }
    expect(Tok::LParen, "'('");
    args.push_back(term());
    while (peek().kind == Tok::Comma) {
      ++at_;
      args.push_back(term());
    }
    expect(Tok::RParen, "')'");
    if (args.size() != arity) {
      throw SyntaxError("'" + head + "' expects " + std::to_string(arity) + " arguments, got " +
                            std::to_string(args.size()),
                        pos);
    }
    return args;
  }

  // An identifier right after `E..` that names the bound variable. Identifiers
  // of the form `E<letters>` are read as a nested quantifier instead.
  bool variable_candidate(std::size_t k) const {
    const Token& t = peek(k);
    if (t.kind != Tok::Ident || sig_.is_declared(t.text) || t.text == "quote") return false;
    return !(t.text.size() > 1 && t.text[0] == 'E');
  }

  Formula quantified(const std::string& var, std::size_t pos) {
    if (sig_.is_declared(var)) throw SyntaxError("bound variable '" + var + "' is a declared symbol", pos);
    bound_.push_back(var);
    Formula body = unary();
    bound_.pop_back();
    return Formula::exists(var, std::move(body));
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        ++at_;
        return Formula::neg(unary());
      case Tok::LParen: {
        ++at_;
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        break;
      default:
        throw SyntaxError("expected a formula", t.pos);
    }
    const std::string name = t.text;
    const std::size_t pos = t.pos;
    if (auto arity = sig_.predicate_arity(name)) {
      ++at_;
      return Formula::atom(name, arguments(name, *arity, pos));
    }
    if (name[0] == 'E' && !sig_.is_declared(name)) {
      ++at_;
      const std::string glued = name.substr(1);
      if (glued.empty() || variable_candidate(0)) {
        if (!variable_candidate(0)) throw SyntaxError("expected a variable after 'E'", peek().pos);
        const std::string var = peek().text;
        const std::size_t vpos = peek().pos;
        ++at_;
        return quantified(var, vpos);
      }
      return quantified(glued, pos);
    }
    if (sig_.is_declared(name)) throw SyntaxError("'" + name + "' is not a predicate", pos);
    throw UnknownSymbolError(name);
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  const Signature& sig_;
  ParseOptions opts_;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig, const ParseOptions& opts) {
  Parser p(text, sig, opts);
  Formula f = p.formula();
  p.finish();
  return f;
}

Term parse_term(std::string_view text, const Signature& sig, const ParseOptions& opts) {
  Parser p(text, sig, opts);
  Term t = p.term();
  p.finish();
  return t;
}

}  // namespace mqlogic

namespace mqlogic {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t find_top_level(std::string_view text, std::string_view token) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && text.substr(i, token.size()) == token) return i;
  }
  return std::string_view::npos;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && c == sep) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

}  // namespace mqlogic
