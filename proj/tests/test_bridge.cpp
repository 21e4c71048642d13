// Finite derivations built forward from initial sequents must pass the
// checker, and every sequent in them must hold under sum valuations.
#include <gtest/gtest.h>

#include "mqlogic/calculus.hpp"
#include "mqlogic/sampling.hpp"
#include "mqlogic/semantics.hpp"

using namespace mqlogic;

namespace {

struct Built {
  Derivation d;
  Sequent s;
};

std::optional<Formula> pick(Sampler& r, const OmegaMultiset& m) {
  if (m.empty()) return std::nullopt;
  auto it = m.entries().begin();
  std::advance(it, static_cast<long>(r.below(m.support_size())));
  return it->first;
}

class Builder {
 public:
  explicit Builder(Sampler& r) : r_(r) {}

  Built initial() {
    Sequent s{r_.context(), r_.context()};
    const Formula a = r_.sentence();
    s.antecedent.add(a);
    s.succedent.add(a, r_.coin(0.3) ? Multiplicity::omega() : Multiplicity::finite(1));
    return emit(RuleId::Init, s, {});
  }

  Built grow(std::size_t depth) {
    Built b = initial();
    for (std::size_t i = 0; i < depth; ++i) b = step(std::move(b), depth - i);
    return b;
  }

  std::vector<Sequent> sequents;

 private:
  Built emit(RuleId rule, Sequent s, std::vector<Derivation> premises) {
    sequents.push_back(s);
    return {Derivation::node(rule, SchematicSequent::from(s), std::move(premises)), s};
  }

  Built step(Built b, std::size_t left) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      switch (r_.below(5)) {
        case 0:
          if (auto f = pick(r_, b.s.antecedent)) {
            Sequent s = b.s;
            s.antecedent.remove_one(*f);
            s.succedent.add(Formula::neg(*f));
            return emit(RuleId::NegR, s, {b.d});
          }
          break;
        case 1:
          if (auto f = pick(r_, b.s.succedent)) {
            Sequent s = b.s;
            s.succedent.remove_one(*f);
            s.antecedent.add(Formula::neg(*f));
            return emit(RuleId::NegL, s, {b.d});
          }
          break;
        case 2: {
          auto a = pick(r_, b.s.antecedent);
          auto c = pick(r_, b.s.succedent);
          if (a && c) {
            Sequent s = b.s;
            s.antecedent.remove_one(*a);
            s.succedent.remove_one(*c);
            s.succedent.add(Formula::cond(*a, *c));
            return emit(RuleId::CondR, s, {b.d});
          }
          break;
        }
        case 3: {
          auto a = pick(r_, b.s.succedent);
          if (!a) break;
          Built other = left > 1 && r_.coin(0.3) ? step(initial(), left - 1) : initial();
          auto c = pick(r_, other.s.antecedent);
          if (!c) break;
          Sequent s1 = b.s;
          s1.succedent.remove_one(*a);
          Sequent s2 = other.s;
          s2.antecedent.remove_one(*c);
          Sequent s{multiset_union(s1.antecedent, s2.antecedent), multiset_union(s1.succedent, s2.succedent)};
          s.antecedent.add(Formula::cond(*a, *c));
          return emit(RuleId::CondL, s, {b.d, other.d});
        }
        default:
          // vacuous ∃R over a formula held ω times
          for (const auto& [f, m] : b.s.succedent.entries()) {
            if (!m.is_omega()) continue;
            Sequent s = b.s;
            OmegaMultiset rest;
            for (const auto& [g, k] : s.succedent.entries()) {
              if (g != f) rest.add(g, k);
            }
            s.succedent = rest;
            s.succedent.add(Formula::exists("v" + std::to_string(fresh_++), f));
            return emit(RuleId::ExistsR, s, {b.d});
          }
          break;
      }
    }
    return b;
  }

  Sampler& r_;
  std::size_t fresh_ = 0;
};

}  // namespace

TEST(Bridge, ForwardDerivationsCheckAndHold) {
  const auto sig = fuzz_signature();
  SamplerLimits lim;
  lim.max_depth = 2;
  std::size_t nodes = 0;
  for (std::uint64_t i = 0; i < 60; ++i) {
    Sampler r(sample_seed(77, i), lim);
    Builder b(r);
    const Built top = b.grow(1 + r.below(4));
    const auto rep = check_derivation(top.d, VacuousPolicy::Multiplicative, 4, *sig);
    ASSERT_TRUE(rep.ok) << "derivation " << i << " failed at " << rep.failed_path << ": "
                        << rep.nodes.back().verdict.message;
    nodes += b.sequents.size();
    for (std::uint64_t k = 0; k < 1000; ++k) {
      Sampler vs(sample_seed(78 + i, k), lim);
      const Valuation v = vs.valuation(QuantifierMode::Sum);
      for (const auto& s : b.sequents) ASSERT_TRUE(sequent_sound(v, s)) << to_string(s) << "\n" << v.render();
    }
  }
  EXPECT_GT(nodes, 120u);
}
