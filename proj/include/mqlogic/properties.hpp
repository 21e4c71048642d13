#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mqlogic {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

/// Each runs `n` random cases over the fuzz signature.
PropertyResult property_range(std::size_t n, std::uint64_t seed);
PropertyResult property_involution(std::size_t n, std::uint64_t seed);
PropertyResult property_residuation(std::size_t n, std::uint64_t seed);
/// Sum clause >= sup clause for Ex A with quantifier-free A, with equality
/// when at most one instance is positive and the tail is 0.
PropertyResult property_sum_dominates_sup(std::size_t n, std::uint64_t seed);
/// 20 closed terms outside the relevant set per case all give the tail value.
PropertyResult property_tail(std::size_t n, std::uint64_t seed);

std::vector<PropertyResult> semantic_property_suite(std::size_t n, std::uint64_t seed);

}  // namespace mqlogic
