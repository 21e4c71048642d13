#include <gtest/gtest.h>

#include "mqlogic/fuzz.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/rewrite.hpp"

using namespace mqlogic;

namespace {

FuzzConfig config(RuleId r, QuantifierMode m, std::size_t n, std::uint64_t seed = 7) {
  FuzzConfig c;
  c.rule = r;
  c.mode = m;
  c.samples = n;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Fuzz, SerialMatchesParallel) {
  for (RuleId r : fuzzable_rules()) {
    for (QuantifierMode m : {QuantifierMode::Sum, QuantifierMode::Sup}) {
      const auto c = config(r, m, 400);
      const auto a = fuzz_rule_serial(c);
      const auto b = fuzz_rule_parallel(c);
      EXPECT_EQ(a.informative, b.informative) << to_string(r);
      ASSERT_EQ(a.first_violation.has_value(), b.first_violation.has_value()) << to_string(r);
      if (a.first_violation) {
        EXPECT_EQ(a.first_violation->index, b.first_violation->index);
        EXPECT_EQ(a.first_violation->valuation, b.first_violation->valuation);
      }
    }
  }
}

TEST(Fuzz, SamplesAreReproducible) {
  const auto c = config(RuleId::CondL, QuantifierMode::Sum, 10);
  for (std::size_t i = 0; i < 10; ++i) {
    std::string v1, v2;
    const auto a = fuzz_sample(c, i, &v1);
    const auto b = fuzz_sample(c, i, &v2);
    EXPECT_EQ(v1, v2);
    EXPECT_EQ(a.conclusion, b.conclusion);
    EXPECT_EQ(a.premises, b.premises);
  }
}

TEST(Fuzz, SumClauseHasNoViolations) {
  for (RuleId r : fuzzable_rules()) {
    const auto res = fuzz_rule_parallel(config(r, QuantifierMode::Sum, 1000, 99));
    EXPECT_FALSE(res.first_violation.has_value()) << to_string(r) << ": " << res.first_violation->outcome.conclusion;
    EXPECT_GT(res.informative, 0u) << to_string(r);
  }
}

TEST(Fuzz, SupClauseBreaksExistsRight) {
  const auto res = fuzz_rule_parallel(config(RuleId::ExistsR, QuantifierMode::Sup, 10000, 20240601));
  ASSERT_TRUE(res.first_violation.has_value());
  EXPECT_TRUE(res.first_violation->outcome.premises_sound);
  EXPECT_FALSE(res.first_violation->outcome.conclusion_sound);
}

TEST(Fuzz, InitSoundUnderBothClauses) {
  EXPECT_FALSE(fuzz_rule_parallel(config(RuleId::Init, QuantifierMode::Sup, 1000)).first_violation);
  EXPECT_FALSE(fuzz_rule_parallel(config(RuleId::Init, QuantifierMode::Sum, 1000)).first_violation);
}

TEST(Fuzz, HalfValuedInstancesUnderSup) {
  const auto sig = std::make_shared<Signature>(Signature::parse("const a b\npred P/1\n"));
  Valuation v(sig, QuantifierMode::Sup);
  v.set_default("P", UnitValue(Rational(1, 2)));
  ParseOptions o;
  o.allow_free_variables = true;
  const Formula body = parse_formula("P(x)", *sig, o);
  const auto sup = exists_right_outcome(v, {}, {}, body, "x");
  EXPECT_TRUE(sup.violation());
  v.set_mode(QuantifierMode::Sum);
  const auto sum = exists_right_outcome(v, {}, {}, body, "x");
  EXPECT_FALSE(sum.violation());
  EXPECT_TRUE(sum.conclusion_sound);
}

TEST(Fuzz, InstanceSeriesTailAgrees) {
  const auto sig = std::make_shared<Signature>(Signature::parse("const a b\nfun f/1\npred P/1\n"));
  Valuation v(sig);
  v.set_atom(Formula::atom("P", {Term::app("f", {Term::constant("a")})}), UnitValue(Rational(1, 3)));
  v.set_default("P", UnitValue(Rational(1, 7)));
  ParseOptions o;
  o.allow_free_variables = true;
  const auto s = instance_series(v, parse_formula("P(x)", *sig, o), "x");
  EXPECT_EQ(s.tail, UnitValue(Rational(1, 7)));
  const auto terms = enumerate_closed_terms(*sig, s.prefix.size());
  for (std::size_t j = 0; j < s.prefix.size(); ++j) {
    const bool special = terms[j] == Term::app("f", {Term::constant("a")});
    EXPECT_EQ(s.prefix[j], UnitValue(special ? Rational(1, 3) : Rational(1, 7))) << to_string(terms[j]);
  }
}
