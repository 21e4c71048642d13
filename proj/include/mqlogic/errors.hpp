#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mqlogic {

/// Malformed concrete syntax. `position` is a byte offset into the input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbolError : public std::runtime_error {
 public:
  explicit UnknownSymbolError(const std::string& symbol)
      : std::runtime_error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Ill-formed signature declarations, including rewrite rules that fail the
/// load-time checks.
class SignatureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RewriteBudgetExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation failures: open formulas, unsupported quantification patterns.
class SemanticError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The transparent unfolding of T-atoms did not bottom out within the budget.
class UngroundedError : public SemanticError {
  using SemanticError::SemanticError;
};

/// A builtin derivation could not be built over the given signature.
class ConstructionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mqlogic
