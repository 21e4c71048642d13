#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "mqlogic/summation.hpp"
#include "mqlogic/sampling.hpp"

using namespace mqlogic;
using Oracle = boost::multiprecision::cpp_rational;
using boost::multiprecision::min;

namespace {

Oracle oracle(const Rational& q) { return Oracle(q.get_str()); }

// Sum of a series with a constant tail; a positive tail diverges, which only
// matters through the clamp, so it is reported as 1 + the prefix sum.
Oracle clamped_series(const TailSeq& s, bool complement) {
  Oracle total = 0;
  for (const auto& q : s.prefix) total += complement ? 1 - oracle(q) : oracle(q);
  const Oracle tail = complement ? 1 - oracle(s.tail) : oracle(s.tail);
  if (tail > 0) return 1;
  return min(Oracle(1), total);
}

}  // namespace

TEST(Summation, AllOnes) {
  const TailSeq ones{{Rational(1)}, Rational(1)};
  const auto r = check_summation_instance(ones, ones, ones);
  EXPECT_TRUE(r.hypothesis_all);
  EXPECT_TRUE(r.conclusion);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.rhs, 1);
}

TEST(Summation, HypothesisFailureReported) {
  const TailSeq one{{Rational(1)}, Rational(1)};
  const TailSeq zero{{Rational(0)}, Rational(0)};
  const auto r = check_summation_instance(one, one, zero);
  EXPECT_FALSE(r.hypothesis_all);
  EXPECT_FALSE(r.hypothesis_tail);
  ASSERT_EQ(r.hypothesis.size(), 1u);
  EXPECT_FALSE(r.hypothesis[0]);
}

TEST(Summation, OutOfRangeRejected) {
  const TailSeq bad{{Rational(3, 2)}, Rational(0)};
  const TailSeq ok{{}, Rational(0)};
  EXPECT_THROW(check_summation_instance(bad, ok, ok), std::out_of_range);
}

TEST(Summation, ConclusionFollowsFromHypothesis) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Sampler s(sample_seed(41, i));
    const SummationSample t = sample_summation_triple(s, static_cast<unsigned>(i & 3u));
    const auto r = check_summation_instance(t.gamma, t.chi, t.delta);
    ASSERT_TRUE(r.hypothesis_all) << "sampler broke the hypothesis at " << i;
    EXPECT_TRUE(r.conclusion) << i;
    // independent recomputation of both sides
    const Oracle d = clamped_series(t.gamma, true);
    const Oracle x = clamped_series(t.chi, false);
    const Oracle lhs = 1 - min(Oracle(1), d + (1 - x));
    const Oracle rhs = clamped_series(t.delta, false);
    EXPECT_EQ(oracle(r.lhs), lhs) << i;
    EXPECT_EQ(oracle(r.rhs), rhs) << i;
    EXPECT_LE(lhs, rhs) << i;
  }
}
