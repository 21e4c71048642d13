#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mqlogic/calculus.hpp"
#include "mqlogic/signature.hpp"

namespace mqlogic {

/// Numerals, constant m, coding functions fm/2 and Tdot/1 with
///   Tdot(t) => quote(T(t)),  fm(0,a) => a,  fm(succ(n),a) => Tdot(fm(n,a)),
/// and m naming ~Ex x T(fm(x,m)).
std::shared_ptr<Signature> omega_liar_signature();

/// The sentence μ = ~Ex x T(fm(x,m)) and the formula T(fm(t,m)).
Formula omega_liar_sentence();
Formula omega_liar_instance(const Term& t);

struct OmegaLiarDerivations {
  /// Ends in  |- μ.
  Derivation main;
  /// witnesses[i] ends in  T(fm(i,m)) |-  for i = 0..K.
  std::vector<Derivation> witnesses;
};

/// Throws ConstructionError naming the first missing equation or name.
OmegaLiarDerivations omega_liar_derivation(const Signature& sig, std::size_t k);

/// Constant l naming ~Ex x T(l).
std::shared_ptr<Signature> vacuous_liar_signature();

/// Ends in  |- ~Ex x T(l), using vacuous quantification over T(l).
Derivation vacuous_liar_derivation();

}  // namespace mqlogic
