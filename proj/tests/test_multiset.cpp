#include <gtest/gtest.h>

#include "mqlogic/constructions.hpp"
#include "mqlogic/multiset.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/sampling.hpp"

using namespace mqlogic;

namespace {

const Multiplicity kOne = Multiplicity::finite(1);
const Multiplicity kOmega = Multiplicity::omega();

Formula tl() { return Formula::atom("T", {Term::constant("l")}); }
Formula atom_a() { return Formula::atom("P", {Term::constant("a")}); }
Formula atom_b() { return Formula::atom("P", {Term::constant("b")}); }

}  // namespace

TEST(Union, Examples) {
  EXPECT_EQ(multiset_union(OmegaMultiset{{tl(), kOne}}, OmegaMultiset{{tl(), kOmega}}), (OmegaMultiset{{tl(), kOmega}}));
  const OmegaMultiset a2{{atom_a(), Multiplicity::finite(2)}};
  EXPECT_EQ(multiset_union(OmegaMultiset{}, a2), a2);
  EXPECT_EQ(multiset_union(OmegaMultiset{{atom_a(), kOne}, {atom_b(), kOne}}, OmegaMultiset{{atom_a(), kOne}}),
            (OmegaMultiset{{atom_a(), Multiplicity::finite(2)}, {atom_b(), kOne}}));
}

TEST(Union, OmegaAbsorbsFiniteCopies) {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    const OmegaMultiset w{{tl(), kOmega}};
    EXPECT_EQ(multiset_union(w, OmegaMultiset{{tl(), Multiplicity::finite(n)}}), w);
    EXPECT_EQ(Multiplicity::finite(n) + kOmega, kOmega);
  }
}

TEST(Union, CommutativeAndAssociative) {
  const auto sig = fuzz_signature();
  for (std::uint64_t i = 0; i < 300; ++i) {
    Sampler s(sample_seed(3, i));
    const OmegaMultiset x = s.context();
    const OmegaMultiset y = s.context();
    const OmegaMultiset z = s.context();
    EXPECT_EQ(multiset_union(x, y), multiset_union(y, x));
    EXPECT_EQ(multiset_union(multiset_union(x, y), z), multiset_union(x, multiset_union(y, z)));
    EXPECT_EQ(multiset_union(x, OmegaMultiset{}), x);
  }
}

TEST(OmegaUnion, Examples) {
  IndexedFamily tail_only;
  tail_only.tail = OmegaMultiset{{tl(), kOne}};
  EXPECT_EQ(omega_union(tail_only), (OmegaMultiset{{tl(), kOmega}}));

  IndexedFamily one;
  one.explicit_members = {OmegaMultiset{{atom_a(), kOne}}};
  EXPECT_EQ(omega_union(one), (OmegaMultiset{{atom_a(), kOne}}));

  IndexedFamily two;
  two.explicit_members = {OmegaMultiset{{atom_a(), kOne}}, OmegaMultiset{{atom_a(), Multiplicity::finite(2)}}};
  EXPECT_EQ(omega_union(two), (OmegaMultiset{{atom_a(), Multiplicity::finite(3)}}));
}

TEST(OmegaUnion, TailSupportBecomesOmega) {
  IndexedFamily fam;
  fam.explicit_members = {OmegaMultiset{{atom_a(), kOne}}};
  fam.tail = OmegaMultiset{{atom_a(), kOne}, {atom_b(), Multiplicity::finite(5)}};
  EXPECT_EQ(omega_union(fam), (OmegaMultiset{{atom_a(), kOmega}, {atom_b(), kOmega}}));
}

TEST(MultiplicityOf, Examples) {
  auto sig = omega_liar_signature();
  const Term m = Term::constant("m");
  const OmegaMultiset coded{{Formula::atom("T", {Term::app("fm", {Term::numeral(0), m})}), kOne}};
  EXPECT_EQ(multiplicity_of(coded, Formula::atom("T", {m}), *sig), kOne);
  EXPECT_FALSE(multiplicity_of(OmegaMultiset{}, Formula::atom("T", {m}), *sig).has_value());
  const OmegaMultiset w{{Formula::atom("T", {m}), kOmega}};
  EXPECT_EQ(multiplicity_of(w, Formula::atom("T", {m}), *sig), kOmega);
}

TEST(Multiset, RemoveOne) {
  OmegaMultiset m{{atom_a(), Multiplicity::finite(2)}, {tl(), kOmega}};
  EXPECT_TRUE(m.remove_one(atom_a()));
  EXPECT_EQ(m.multiplicity(atom_a()), kOne);
  EXPECT_TRUE(m.remove_one(atom_a()));
  EXPECT_FALSE(m.multiplicity(atom_a()).has_value());
  EXPECT_FALSE(m.remove_one(atom_a()));
  EXPECT_TRUE(m.remove_one(tl()));
  EXPECT_EQ(m.multiplicity(tl()), kOmega);
}

TEST(Multiset, ParseAndPrint) {
  const Signature sig = Signature::parse("const a l\npred P/1\n");
  const Sequent s = parse_sequent("P(a), P(a)^2 |- T(l)^w", sig);
  EXPECT_EQ(s.antecedent.multiplicity(atom_a()), Multiplicity::finite(3));
  EXPECT_EQ(s.succedent.multiplicity(tl()), kOmega);
  EXPECT_EQ(parse_sequent(to_string(s), sig), s);
  EXPECT_EQ(parse_sequent("|-", sig), Sequent{});
}
