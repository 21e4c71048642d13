#include <gtest/gtest.h>

#include "mqlogic/calculus.hpp"
#include "mqlogic/constructions.hpp"
#include "mqlogic/derivation_json.hpp"
#include "mqlogic/parser.hpp"

using namespace mqlogic;

namespace {

struct Fixture {
  std::shared_ptr<Signature> sig;
  SchematicSequent seq(const char* text) const { return parse_schematic_sequent(text, *sig); }
  Verdict check(RuleId r, std::vector<const char*> premises, const char* conclusion,
                VacuousPolicy p = VacuousPolicy::Multiplicative) const {
    std::vector<SchematicSequent> ps;
    for (auto t : premises) ps.push_back(seq(t));
    return check_instance(r, ps, nullptr, seq(conclusion), p, *sig);
  }
};

Fixture plain() {
  return {std::make_shared<Signature>(Signature::parse("const a b l\npred P/1 Q/1\nname l = ~Ex x T(l)\n"))};
}

}  // namespace

TEST(Rules, Init) {
  const auto f = plain();
  EXPECT_TRUE(f.check(RuleId::Init, {}, "P(a) |- P(a)").ok());
  EXPECT_TRUE(f.check(RuleId::Init, {}, "P(a), Q(b) |- P(b), P(a)^w").ok());
  EXPECT_FALSE(f.check(RuleId::Init, {}, "P(a) |- P(b)").ok());
  EXPECT_EQ(f.check(RuleId::Init, {"P(a) |- P(a)"}, "P(a) |- P(a)").kind, VerdictKind::PremiseCount);
}

TEST(Rules, Negation) {
  const auto f = plain();
  EXPECT_TRUE(f.check(RuleId::NegL, {"Q(b) |- P(a)"}, "~P(a), Q(b) |-").ok());
  EXPECT_TRUE(f.check(RuleId::NegR, {"P(a) |- Q(b)"}, "|- Q(b), ~P(a)").ok());
  EXPECT_FALSE(f.check(RuleId::NegR, {"P(a) |- Q(b)"}, "|- ~P(a)").ok());
}

TEST(Rules, Conditional) {
  const auto f = plain();
  EXPECT_TRUE(f.check(RuleId::CondR, {"P(a) |- Q(b)"}, "|- P(a) -> Q(b)").ok());
  EXPECT_TRUE(f.check(RuleId::CondL, {"|- P(a)", "Q(b) |-"}, "P(a) -> Q(b) |-").ok());
  EXPECT_TRUE(f.check(RuleId::CondL, {"P(b) |- P(a)", "Q(b) |- Q(a)"}, "P(b), P(a) -> Q(b) |- Q(a)").ok());
  EXPECT_FALSE(f.check(RuleId::CondL, {"|- P(a)", "Q(b) |-"}, "P(a) -> Q(b) |- P(b)").ok());
  EXPECT_EQ(f.check(RuleId::CondL, {"|- P(a)"}, "P(a) -> Q(b) |-").kind, VerdictKind::PremiseCount);
}

TEST(Rules, ExistsRightMultiplicative) {
  const auto f = plain();
  EXPECT_TRUE(f.check(RuleId::ExistsR, {"|- T(l)^w"}, "|- Ex x T(l)").ok());
  const Verdict one = f.check(RuleId::ExistsR, {"|- T(l)"}, "|- Ex x T(l)");
  EXPECT_EQ(one.kind, VerdictKind::MultiplicityMismatch);
  EXPECT_TRUE(f.check(RuleId::ExistsR, {"|- T(l)"}, "|- Ex x T(l)", VacuousPolicy::Additive).ok());
  EXPECT_FALSE(f.check(RuleId::ExistsR, {"|- T(l)^w"}, "|- Ex x T(l)", VacuousPolicy::Additive).ok());
}

TEST(Rules, ExistsRightFamily) {
  const auto f = plain();
  EXPECT_TRUE(f.check(RuleId::ExistsR, {"|- {P(n) | n>=0}"}, "|- Ex x P(x)").ok());
  EXPECT_FALSE(f.check(RuleId::ExistsR, {"|- {P(n) | n>=1}"}, "|- Ex x P(x)").ok());
  EXPECT_FALSE(f.check(RuleId::ExistsR, {"|- P(a)"}, "|- Ex x P(x)").ok());
}

TEST(Rules, TruthRules) {
  auto sig = omega_liar_signature();
  auto seq = [&](const char* t) { return parse_schematic_sequent(t, *sig); };
  EXPECT_TRUE(check_instance(RuleId::TR, {seq("T(fm(0,m)) |- T(fm(0,m))")}, nullptr, seq("T(fm(0,m)) |- T(fm(1,m))"),
                             VacuousPolicy::Multiplicative, *sig)
                  .ok());
  EXPECT_TRUE(check_instance(RuleId::TL, {seq("~Ex x T(fm(x,m)) |-")}, nullptr, seq("T(m) |-"),
                             VacuousPolicy::Multiplicative, *sig)
                  .ok());
  EXPECT_FALSE(check_instance(RuleId::TR, {seq("|- T(m)")}, nullptr, seq("|- T(m)"), VacuousPolicy::Multiplicative, *sig)
                   .ok());
}

TEST(Rules, TruthRulesNeedNames) {
  const Fixture f{std::make_shared<Signature>(Signature::parse("const a\npred P/1\n"))};
  EXPECT_EQ(f.check(RuleId::TR, {"|- P(a)"}, "|- T(quote(P(a)))").kind, VerdictKind::NamingViolation);
}

TEST(Segments, ShiftedFamiliesAreEqual) {
  auto sig = omega_liar_signature();
  auto side = [&](const char* t) { return parse_schematic_sequent(t, *sig).suc; };
  EXPECT_TRUE(sides_equivalent(side("|- {T(fm(succ(n),m)) | n>=0}"), side("|- {T(fm(n,m)) | n>=1}"), *sig));
  EXPECT_TRUE(sides_equivalent(side("|- T(m), {T(fm(n,m)) | n>=1}"), side("|- {T(fm(n,m)) | n>=0}"), *sig));
  EXPECT_TRUE(sides_equivalent(side("|- {T(fm(k,m)) | k>=0}"), side("|- {T(fm(n,m)) | n>=0}"), *sig));
  EXPECT_FALSE(sides_equivalent(side("|- {T(fm(n,m)) | n>=1}"), side("|- {T(fm(n,m)) | n>=0}"), *sig));
  bool shape = true;
  EXPECT_FALSE(sides_equivalent(side("|- {T(fm(n,m)) | n>=0}^2"), side("|- {T(fm(n,m)) | n>=0}"), *sig, &shape));
  EXPECT_TRUE(shape);
}

TEST(Segments, IndexFreeSegmentIsOmega) {
  auto sig = omega_liar_signature();
  auto side = [&](const char* t) { return parse_schematic_sequent(t, *sig).suc; };
  EXPECT_TRUE(sides_equivalent(side("|- {T(m) | n>=3}"), side("|- T(m)^w"), *sig));
}

TEST(Derivations, SingleInit) {
  const auto f = plain();
  const Derivation d = Derivation::node(RuleId::Init, f.seq("P(a) |- P(a)"));
  const auto r = check_derivation(d, VacuousPolicy::Multiplicative, 4, *f.sig);
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_EQ(r.nodes[0].path, "$");
  EXPECT_FALSE(r.bounded);
}

TEST(Derivations, FailureStopsAtFirstBadNode) {
  const auto f = plain();
  Derivation bad = Derivation::node(RuleId::Init, f.seq("P(a) |- P(b)"));
  Derivation d = Derivation::node(RuleId::NegR, f.seq("|- P(b), ~P(a)"), {bad});
  const auto r = check_derivation(d, VacuousPolicy::Multiplicative, 4, *f.sig);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed_path, "$.p0");
  EXPECT_EQ(r.nodes.back().verdict.kind, VerdictKind::ShapeMismatch);
}

TEST(Derivations, VacuousLiarDependsOnPolicy) {
  auto sig = vacuous_liar_signature();
  const Derivation d = vacuous_liar_derivation();
  const auto mult = check_derivation(d, VacuousPolicy::Multiplicative, 4, *sig);
  EXPECT_TRUE(mult.ok);
  EXPECT_EQ(to_string(mult.nodes.front().sequent), "|- ~Ex x T(l)");
  const auto add = check_derivation(d, VacuousPolicy::Additive, 4, *sig);
  EXPECT_FALSE(add.ok);
  EXPECT_EQ(add.nodes.back().rule, "ExistsRw");
  EXPECT_EQ(add.nodes.back().verdict.kind, VerdictKind::MultiplicityMismatch);
}

TEST(Derivations, ZeroDepthRejected) {
  const auto f = plain();
  EXPECT_THROW(check_derivation(Derivation::node(RuleId::Init, f.seq("P(a) |- P(a)")), VacuousPolicy::Additive, 0, *f.sig),
               std::exception);
}

TEST(Json, DerivationRoundTrip) {
  auto sig = omega_liar_signature();
  const auto built = omega_liar_derivation(*sig, 2);
  const Json j = derivation_to_json(built.main);
  const Derivation back = derivation_from_json(j, *sig);
  EXPECT_EQ(derivation_to_json(back).dump(), j.dump());
  const auto a = check_derivation(built.main, VacuousPolicy::Multiplicative, 5, *sig);
  const auto b = check_derivation(back, VacuousPolicy::Multiplicative, 5, *sig);
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
}

TEST(Json, SequentTextForm) {
  const auto f = plain();
  EXPECT_EQ(sequent_from_json(Json("P(a) |- P(b)^w"), *f.sig), f.seq("P(a) |- P(b)^w"));
  const SchematicSequent s = f.seq("P(a) |- {P(n) | n>=2}^w");
  EXPECT_EQ(sequent_from_json(sequent_to_json(s), *f.sig), s);
}
