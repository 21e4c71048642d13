#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mqlogic/signature.hpp"
#include "mqlogic/syntax.hpp"

namespace mqlogic {

enum class Strategy { InnermostLeftmost, OutermostLeftmost };

/// Normal form under the signature's coding equations plus the builtin steps
/// succ(n) -> n+1 and quote(A) -> c when c is the declared name of A.
/// Throws RewriteBudgetExceeded after sig.step_budget() rule applications.
Term normalize_term(const Term& t, const Signature& sig, Strategy strategy = Strategy::InnermostLeftmost);

/// Normalizes every term position of f. Open subterms are rewritten as far
/// as the rules allow.
Formula normalize_formula(const Formula& f, const Signature& sig,
                          Strategy strategy = Strategy::InnermostLeftmost);

bool formulas_equal(const Formula& a, const Formula& b, const Signature& sig);

/// Canonical name of a sentence: the declared constant if there is one,
/// otherwise the name literal quote(A) of the normal form.
Term name_of(const Formula& sentence, const Signature& sig);

/// The sentence denoted by a closed term whose normal form is a canonical
/// name, if any.
std::optional<Formula> denoted_sentence(const Term& t, const Signature& sig);

/// Tries to match a rule pattern against a term; on success fills `binding`.
bool match_pattern(const Term& pattern, const Term& t, std::vector<std::pair<std::string, Term>>& binding);

/// The first n closed terms in canonical order: by depth, then declaration
/// order of the head symbol, then lexicographically by argument position.
/// Numerals, when enabled, come first at each depth. When the declared
/// terms run out the enumeration continues with the name chain
/// quote(T(t0)), quote(T(quote(T(t0)))), ...
std::vector<Term> enumerate_closed_terms(const Signature& sig, std::size_t n);

/// The term at index j of the instance enumeration: the numeral j when the
/// signature has numerals, otherwise enumerate_closed_terms(sig, j+1)[j].
Term instance_term(const Signature& sig, std::size_t j);

}  // namespace mqlogic
