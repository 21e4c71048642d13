#include <gtest/gtest.h>

#include "mqlogic/constructions.hpp"
#include "mqlogic/errors.hpp"

using namespace mqlogic;

TEST(OmegaLiar, WitnessesCertified) {
  auto sig = omega_liar_signature();
  const auto built = omega_liar_derivation(*sig, 3);
  ASSERT_EQ(built.witnesses.size(), 4u);
  for (std::size_t i = 0; i < built.witnesses.size(); ++i) {
    const auto r = check_derivation(built.witnesses[i], VacuousPolicy::Multiplicative, 4, *sig);
    EXPECT_TRUE(r.ok) << i << " " << r.failed_path;
    EXPECT_EQ(to_string(r.nodes.front().sequent), "T(fm(" + std::to_string(i) + ",m)) |-");
  }
  const auto main = check_derivation(built.main, VacuousPolicy::Multiplicative, 4, *sig);
  EXPECT_TRUE(main.ok) << main.failed_path;
  EXPECT_TRUE(main.bounded);
  EXPECT_FALSE(main.family_spot_checks.empty());
  EXPECT_EQ(to_string(main.nodes.front().sequent), "|- ~Ex x T(fm(x,m))");
}

TEST(OmegaLiar, MissingEquation) {
  Signature sig = Signature::parse(
      "numerals\nconst m\nfun fm/2 Tdot/1\n"
      "rewrite fm(0, a) => a\nrewrite fm(succ(n), a) => Tdot(fm(n, a))\n"
      "name m = ~Ex x T(fm(x, m))\n");
  try {
    omega_liar_derivation(sig, 3);
    FAIL() << "expected a construction error";
  } catch (const ConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("Tdot"), std::string::npos) << e.what();
  }
}

TEST(OmegaLiar, MissingName) {
  Signature sig = Signature::parse(
      "numerals\nconst m\nfun fm/2 Tdot/1\nrewrite Tdot(t) => quote(T(t))\n"
      "rewrite fm(0, a) => a\nrewrite fm(succ(n), a) => Tdot(fm(n, a))\n");
  EXPECT_THROW(omega_liar_derivation(sig, 3), ConstructionError);
}
