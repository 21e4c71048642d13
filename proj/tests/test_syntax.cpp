#include <gtest/gtest.h>

#include <random>

#include "mqlogic/errors.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/rewrite.hpp"
#include "mqlogic/constructions.hpp"
#include "mqlogic/sampling.hpp"

using namespace mqlogic;

namespace {

Signature liar_sig() { return Signature::parse("const l c\npred P/1\n"); }

Term c(const char* n) { return Term::constant(n); }

}  // namespace

TEST(Parse, VacuousBinderGluedToE) {
  const Signature sig = liar_sig();
  const Formula f = parse_formula("~Ex T(l)", sig);
  ASSERT_EQ(f.kind(), Formula::Kind::Neg);
  const Formula& ex = f.left();
  ASSERT_EQ(ex.kind(), Formula::Kind::Exists);
  EXPECT_EQ(ex.symbol(), "x");
  EXPECT_EQ(ex.left(), Formula::atom("T", {c("l")}));
}

TEST(Parse, AtomAndConditional) {
  const Signature sig = liar_sig();
  EXPECT_EQ(parse_formula("P(c)", sig), Formula::atom("P", {c("c")}));
  const Formula pc = Formula::atom("P", {c("c")});
  EXPECT_EQ(parse_formula("P(c) -> P(c)", sig), Formula::cond(pc, pc));
}

TEST(Parse, ConditionalIsRightAssociative) {
  const Signature sig = liar_sig();
  const Formula pc = Formula::atom("P", {c("c")});
  const Formula pl = Formula::atom("P", {c("l")});
  EXPECT_EQ(parse_formula("P(c) -> P(l) -> P(c)", sig), Formula::cond(pc, Formula::cond(pl, pc)));
}

TEST(Parse, ExplicitBoundVariable) {
  const Signature sig = liar_sig();
  const Formula f = parse_formula("Ex y P(y)", sig);
  EXPECT_EQ(f, Formula::exists("y", Formula::atom("P", {Term::var("y")})));
}

TEST(Parse, Errors) {
  const Signature sig = liar_sig();
  EXPECT_THROW(parse_formula("Q(c)", sig), UnknownSymbolError);
  EXPECT_THROW(parse_formula("P(c", sig), SyntaxError);
  EXPECT_THROW(parse_formula("P(c) ->", sig), SyntaxError);
  EXPECT_THROW(parse_formula("P(x)", sig), UnknownSymbolError);
}

TEST(Parse, RoundTripOnRandomFormulas) {
  SamplerLimits lim;
  lim.max_depth = 8;
  const auto sig = fuzz_signature();
  for (std::uint64_t i = 0; i < 500; ++i) {
    Sampler s(sample_seed(99, i), lim);
    const Formula f = s.sentence();
    EXPECT_EQ(parse_formula(to_string(f), *sig), f) << to_string(f);
  }
}

TEST(Substitute, Basics) {
  const Formula tx = Formula::atom("T", {Term::var("x")});
  const Formula tl = Formula::atom("T", {c("l")});
  EXPECT_EQ(substitute(tx, "x", c("l")), tl);
  EXPECT_EQ(substitute(tl, "x", c("c")), tl);
  const Formula bound = Formula::exists("x", tx);
  EXPECT_EQ(substitute(bound, "x", c("c")), bound);
}

TEST(Substitute, IdentityWhenNotFree) {
  SamplerLimits lim;
  lim.max_depth = 5;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(sample_seed(5, i), lim);
    const Formula f = s.sentence();
    EXPECT_EQ(substitute(f, "x", c("a")), f);
  }
}

TEST(FreeVars, Basics) {
  const Formula tx = Formula::atom("T", {Term::var("x")});
  EXPECT_EQ(free_vars(tx), (std::set<std::string>{"x"}));
  EXPECT_TRUE(free_vars(Formula::exists("x", tx)).empty());
  EXPECT_TRUE(free_vars(Formula::exists("x", Formula::atom("T", {c("l")}))).empty());
}

TEST(Enumerate, Examples) {
  const Signature ab = Signature::parse("const a b\n");
  const auto two = enumerate_closed_terms(ab, 2);
  EXPECT_EQ(two, (std::vector<Term>{c("a"), c("b")}));
  const Signature af = Signature::parse("const a\nfun f/1\n");
  const Term a = c("a");
  const Term fa = Term::app("f", {a});
  EXPECT_EQ(enumerate_closed_terms(af, 3), (std::vector<Term>{a, fa, Term::app("f", {fa})}));
  EXPECT_TRUE(enumerate_closed_terms(af, 0).empty());
  EXPECT_THROW(enumerate_closed_terms(Signature::parse("pred P/1\n"), 1), SignatureError);
}

TEST(Enumerate, EveryShallowTermExactlyOnce) {
  const Signature sig = Signature::parse("const a b\nfun f/1 g/2\n");
  // All closed terms of depth <= 2, built independently.
  std::vector<std::set<Term>> by_depth(1);
  by_depth[0] = {c("a"), c("b")};
  std::set<Term> all = by_depth[0];
  for (int d = 1; d <= 2; ++d) {
    std::set<Term> next;
    for (const auto& t : all) next.insert(Term::app("f", {t}));
    for (const auto& t : all) {
      for (const auto& u : all) next.insert(Term::app("g", {t, u}));
    }
    all.insert(next.begin(), next.end());
  }
  std::size_t n = 0;
  std::vector<Term> terms;
  for (n = 64;; n *= 2) {
    terms = enumerate_closed_terms(sig, n);
    std::set<Term> seen(terms.begin(), terms.end());
    if (std::all_of(all.begin(), all.end(), [&](const Term& t) { return seen.count(t) > 0; })) break;
    ASSERT_LT(n, 1u << 20);
  }
  std::set<Term> unique(terms.begin(), terms.end());
  EXPECT_EQ(unique.size(), terms.size());
  EXPECT_EQ(enumerate_closed_terms(sig, n), terms);
}

TEST(Enumerate, NameChainWithoutFunctions) {
  const Signature sig = Signature::parse("const l\nname l = ~Ex x T(l)\n");
  const auto terms = enumerate_closed_terms(sig, 3);
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0], c("l"));
  EXPECT_EQ(terms[1], Term::quote(Formula::atom("T", {c("l")})));
}

TEST(Rewrite, CodingEquations) {
  auto sig = omega_liar_signature();
  const Term m = c("m");
  EXPECT_EQ(normalize_term(Term::app("fm", {Term::numeral(0), m}), *sig), m);
  // fm(1, m) -> Tdot(fm(0, m)) -> quote(T(m))
  EXPECT_EQ(normalize_term(Term::app("fm", {Term::numeral(1), m}), *sig), Term::quote(Formula::atom("T", {m})));
  EXPECT_EQ(normalize_term(m, *sig), m);
}

TEST(Rewrite, DeclaredNameReplacesQuote) {
  auto sig = omega_liar_signature();
  EXPECT_EQ(normalize_term(Term::quote(omega_liar_sentence()), *sig), c("m"));
}

TEST(Rewrite, FormulasEqual) {
  auto sig = omega_liar_signature();
  const Term m = c("m");
  EXPECT_TRUE(formulas_equal(Formula::atom("T", {Term::app("fm", {Term::numeral(0), m})}), Formula::atom("T", {m}), *sig));
  const Formula tm = Formula::atom("T", {m});
  EXPECT_TRUE(formulas_equal(tm, tm, *sig));
  EXPECT_FALSE(formulas_equal(tm, Formula::neg(tm), *sig));
}

TEST(Rewrite, StrategiesAgreeOnRandomTerms) {
  auto sig = omega_liar_signature();
  std::mt19937_64 rng(11);
  std::function<Term(int)> gen = [&](int depth) -> Term {
    const int pick = static_cast<int>(rng() % (depth == 0 ? 2 : 5));
    switch (pick) {
      case 0: return Term::numeral(rng() % 5);
      case 1: return c("m");
      case 2: return Term::app("Tdot", {gen(depth - 1)});
      case 3: return Term::app("fm", {Term::numeral(rng() % 5), gen(depth - 1)});
      default: return Term::app("succ", {gen(depth - 1)});
    }
  };
  for (int i = 0; i < 1000; ++i) {
    const Term t = gen(4);
    EXPECT_EQ(normalize_term(t, *sig, Strategy::InnermostLeftmost), normalize_term(t, *sig, Strategy::OutermostLeftmost))
        << to_string(t);
  }
}

TEST(Signature, RejectsBadRules) {
  EXPECT_THROW(Signature::parse("fun f/1\nrewrite x => f(x)\n"), SignatureError);
  EXPECT_THROW(Signature::parse("fun f/2\nrewrite f(x, x) => x\n"), SignatureError);
  EXPECT_THROW(Signature::parse("fun f/1\nrewrite f(x) => y\n"), SignatureError);
  EXPECT_THROW(Signature::parse("fun f/1 g/1\nrewrite f(x) => g(x)\nrewrite g(x) => f(x)\n"), SignatureError);
}

TEST(Signature, NamesAreInjective) {
  EXPECT_THROW(Signature::parse("const l k\nname l = T(l)\nname k = T(l)\n"), SignatureError);
  EXPECT_THROW(Signature::parse("name q = T(q)\n"), std::exception);
}

TEST(Rewrite, BudgetExceeded) {
  Signature sig = Signature::parse("numerals\nconst m\nfun fm/2 Tdot/1\nrewrite Tdot(t) => quote(T(t))\n"
                                   "rewrite fm(0, a) => a\nrewrite fm(succ(n), a) => Tdot(fm(n, a))\n");
  sig.set_step_budget(5);
  EXPECT_THROW(normalize_term(Term::app("fm", {Term::numeral(50), c("m")}), sig), RewriteBudgetExceeded);
}
