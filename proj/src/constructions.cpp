#include "mqlogic/constructions.hpp"

#include "mqlogic/errors.hpp"
#include "mqlogic/rewrite.hpp"

namespace mqlogic {

namespace {

Formula truth(const Term& t) { return Formula::atom("T", {t}); }

Term fm(const Term& n, const Term& a) { return Term::app("fm", {n, a}); }

SchematicSequent sequent(std::vector<Formula> ant, std::vector<Formula> suc) {
  SchematicSequent s;
  for (auto& f : ant) s.ant.plain.add(f);
  for (auto& f : suc) s.suc.plain.add(f);
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError("signature lacks " + what);
}

}  // namespace

std::shared_ptr<Signature> omega_liar_signature() {
  return std::make_shared<Signature>(Signature::parse(
      "numerals\n"
      "const m\n"
      "fun fm/2\n"
      "fun Tdot/1\n"
      "rewrite Tdot(t) => quote(T(t))\n"
      "rewrite fm(0, a) => a\n"
      "rewrite fm(succ(n), a) => Tdot(fm(n, a))\n"
      "name m = ~Ex x T(fm(x, m))\n"));
}

Formula omega_liar_sentence() {
  return Formula::neg(Formula::exists("x", omega_liar_instance(Term::var("x"))));
}

Formula omega_liar_instance(const Term& t) { return truth(fm(t, Term::constant("m"))); }

OmegaLiarDerivations omega_liar_derivation(const Signature& sig, std::size_t k) {
  require(sig.numerals(), "numerals");
  require(sig.function_arity("fm") == 2u, "the function fm/2");
  require(sig.function_arity("Tdot") == 1u, "the function Tdot/1");
  require(sig.is_constant("m"), "the constant m");
  const Term m = Term::constant("m");
  const Term zero = Term::numeral(0);
  require(normalize_term(Term::app("Tdot", {zero}), sig) == Term::quote(truth(zero)),
          "the equation Tdot(t) => quote(T(t))");
  require(normalize_term(fm(zero, m), sig) == m, "the equation fm(0,a) => a");
  require(normalize_term(fm(Term::numeral(1), zero), sig) == Term::quote(truth(zero)),
          "the equation fm(succ(n),a) => Tdot(fm(n,a))");
  const Formula mu = omega_liar_sentence();
  auto named = sig.named_sentence("m");
  require(named && normalize_formula(*named, sig) == normalize_formula(mu, sig), "the name m = ~Ex x T(fm(x,m))");

  const Term n = Term::var("n");
  auto F = [](const Term& t) { return omega_liar_instance(t); };
  const Formula ex = Formula::exists("x", F(Term::var("x")));
  const FamilySegment later{F(Term::app("succ", {n})), "n", 0, Multiplicity::finite(1)};
  const FamilySegment all{F(n), "n", 0, Multiplicity::finite(1)};

  // F(n) |- F(n+1): the name of F(n) rewrites to fm(n+1, m).
  Derivation step = Derivation::node(RuleId::TR, sequent({F(n)}, {F(Term::app("succ", {n}))}),
                                     {Derivation::node(RuleId::Init, sequent({F(n)}, {F(n)}))});
  SchematicSequent e1 = sequent({ex}, {});
  e1.suc.segments.push_back(later);
  Derivation d = with_family(Derivation::node(RuleId::ExistsL, e1), UniformFamily{"n", 0, step, {}});

  SchematicSequent n1 = sequent({}, {mu});
  n1.suc.segments.push_back(later);
  d = Derivation::node(RuleId::NegR, n1, {d});
  SchematicSequent r1;
  r1.suc.segments.push_back(all);
  d = Derivation::node(RuleId::TR, r1, {d});
  d = Derivation::node(RuleId::ExistsR, sequent({}, {ex}), {d});
  d = Derivation::node(RuleId::NegL, sequent({mu}, {}), {d});
  const Derivation w0 = Derivation::node(RuleId::TL, sequent({F(zero)}, {}), {d});

  OmegaLiarDerivations out;
  out.witnesses.push_back(w0);
  for (std::size_t i = 1; i <= k; ++i) {
    out.witnesses.push_back(
        Derivation::node(RuleId::TL, sequent({F(Term::numeral(i))}, {}), {out.witnesses.back()}));
  }

  Derivation chain = Derivation::node(RuleId::TL, sequent({F(n)}, {}), {Derivation::previous()});
  Derivation e2 = with_family(Derivation::node(RuleId::ExistsL, sequent({ex}, {})), UniformFamily{"n", 1, chain, {w0}});
  out.main = Derivation::node(RuleId::NegR, sequent({}, {mu}), {e2});
  return out;
}

std::shared_ptr<Signature> vacuous_liar_signature() {
  return std::make_shared<Signature>(Signature::parse("const l\nname l = ~Ex x T(l)\n"));
}

Derivation vacuous_liar_derivation() {
  const Formula tl = truth(Term::constant("l"));
  const Formula ex = Formula::exists("x", tl);
  const Formula liar = Formula::neg(ex);
  auto omega = [](SchematicSequent s, const Formula& f) {
    s.suc.plain.add(f, Multiplicity::omega());
    return s;
  };

  Derivation d = Derivation::node(RuleId::Init, sequent({tl}, {tl}));
  d = with_family(Derivation::node(RuleId::ExistsL, omega(sequent({ex}, {}), tl)), UniformFamily{"n", 0, d, {}});
  d = Derivation::node(RuleId::NegR, omega(sequent({}, {liar}), tl), {d});
  d = Derivation::node(RuleId::TR, omega(sequent({}, {}), tl), {d});
  d = Derivation::node(RuleId::ExistsR, sequent({}, {ex}), {d});
  d = Derivation::node(RuleId::NegL, sequent({liar}, {}), {d});
  d = Derivation::node(RuleId::TL, sequent({tl}, {}), {d});
  d = with_family(Derivation::node(RuleId::ExistsL, sequent({ex}, {})), UniformFamily{"n", 0, d, {}});
  return Derivation::node(RuleId::NegR, sequent({}, {liar}), {d});
}

}  // namespace mqlogic
