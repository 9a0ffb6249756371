#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zsindex/index.hpp"

using namespace zsindex;

namespace {

oracle::Terms terms_of(const ZsSequence& s) {
  return oracle::Terms(s.terms().begin(), s.terms().end());
}

}  // namespace

TEST(Ratio, ReducesAndCompares) {
  EXPECT_EQ(Ratio(70, 35), Ratio(2, 1));
  EXPECT_TRUE(Ratio(75, 25).is_integer());
  EXPECT_FALSE(Ratio(10, 25).is_integer());
  EXPECT_EQ(to_string(Ratio(10, 25)), "2/5");
  EXPECT_EQ(to_string(Ratio(50, 25)), "2");
  EXPECT_TRUE(Ratio(1, 2) < Ratio(2, 3));
  EXPECT_THROW(Ratio(1, 0), Error);
}

TEST(GNorm, Examples) {
  EXPECT_EQ(g_norm(ZsSequence(25, {1, 1, 1, 22}), 1), Ratio(1, 1));
  const ZsSequence s35(35, {5, 10, 24, 31});
  EXPECT_EQ(g_norm(s35, 1), Ratio(2, 1));
  EXPECT_EQ(g_norm(s35, 8), Ratio(1, 1));
  EXPECT_EQ(g_norm(ZsSequence(25, {5, 10, 24, 11}), 2), Ratio(3, 1));
  EXPECT_EQ(g_norm(ZsSequence(25, {1, 2, 3, 4}), 1), Ratio(10, 25));
  EXPECT_THROW(g_norm(s35, 7), Error);
}

TEST(IndexOracle, Examples) {
  const auto r5 = index_oracle(ZsSequence(5, {1, 1, 1, 2}));
  EXPECT_EQ(r5.index_value, Ratio(1, 1));
  EXPECT_EQ(r5.witness_unit, 1);

  // Smallest unit with sum 25, frozen from the full unit scan (23 also works).
  const ZsSequence s25(25, {5, 10, 24, 11});
  const auto r25 = index_oracle(s25);
  EXPECT_EQ(r25.index_value, Ratio(1, 1));
  EXPECT_EQ(r25.witness_unit, 16);
  EXPECT_EQ(oracle::scaled_sum(terms_of(s25), 23, 25), 25);

  const auto r35 = index_oracle(ZsSequence(35, {5, 10, 24, 31}));
  EXPECT_EQ(r35.index_value, Ratio(1, 1));
  EXPECT_EQ(r35.witness_unit, 8);

  const auto r8 = index_oracle(ZsSequence(8, {1, 4, 5, 6}));
  EXPECT_EQ(r8.index_value, Ratio(2, 1));
}

TEST(IndexOracle, MatchesBruteForceWithAndWithoutEarlyExit) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const Value n = std::uniform_int_distribution<Value>(2, 150)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<Value> t(k);
    for (auto& x : t) x = std::uniform_int_distribution<Value>(1, n - 1)(rng);
    const ZsSequence s(n, t);
    const auto [best, arg] = oracle::min_sum(terms_of(s), n);
    const auto full = index_oracle(s, {.early_exit = false});
    const auto fast = index_oracle(s);
    ASSERT_EQ(full.numerator, best);
    ASSERT_EQ(full.witness_unit, arg);
    ASSERT_EQ(fast.numerator, best);
    ASSERT_EQ(fast.witness_unit, arg);
    ASSERT_EQ(full.index_value, Ratio(best, n));
    // Zero sum exactly when the index is an integer.
    ASSERT_EQ(is_zero_sum(s), full.index_value.is_integer()) << to_string(s);
  }
}

TEST(IndexOracle, ParallelMatchesSerial) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Value n = std::uniform_int_distribution<Value>(5, 5000)(rng);
    std::vector<Value> t(4);
    for (auto& x : t) x = std::uniform_int_distribution<Value>(1, n - 1)(rng);
    const ZsSequence s(n, t);
    for (bool early : {true, false}) {
      for (int threads : {1, 2, 3, 7}) {
        const auto a = index_oracle(s, {.early_exit = early});
        const auto b = index_oracle_parallel(s, {.early_exit = early}, threads);
        ASSERT_EQ(a.numerator, b.numerator);
        ASSERT_EQ(a.witness_unit, b.witness_unit) << to_string(s) << " threads=" << threads;
      }
    }
  }
}

TEST(IndexOracle, ScaleInvariance) {
  for (Value n : {25, 36, 35}) {
    for (const auto& s : enumerate_minimal4(n)) {
      const auto base = index_oracle(s).index_value;
      for (Value u : units_stream(n)) {
        ASSERT_EQ(index_oracle(scale(s, u)).index_value, base);
      }
    }
  }
}

TEST(GNorm, NegationIdentityAndRange) {
  for (Value n : {25, 35, 49, 55}) {
    for (const auto& s : enumerate_minimal4(n)) {
      for (Value m : units_stream(n)) {
        const auto a = g_norm(s, m);
        const auto b = g_norm(s, n - m);
        ASSERT_TRUE(a.is_integer());
        ASSERT_EQ(a.numerator() + b.numerator(), 4);
        ASSERT_GE(a.numerator(), 1);
        ASSERT_LE(a.numerator(), 3);
      }
    }
  }
}

TEST(Criteria, Examples) {
  const ZsSequence s25(25, {5, 10, 24, 11});
  EXPECT_TRUE(criterion_one(s25, 23));
  EXPECT_TRUE(criterion_one(ZsSequence(5, {1, 1, 1, 2}), 1));
  const ZsSequence s35(35, {5, 10, 24, 31});
  EXPECT_FALSE(criterion_one(s35, 1));

  EXPECT_TRUE(criterion_two(s25, 2));
  EXPECT_FALSE(criterion_two(ZsSequence(25, {1, 1, 1, 22}), 1));
  // -1 gives 4n - 2n = 2n; the smallest unit reaching 3n is 13, then 27 = 35 - 8.
  EXPECT_FALSE(criterion_two(s35, 34));
  EXPECT_TRUE(criterion_two(s35, 13));
  EXPECT_TRUE(criterion_two(s35, 27));
  for (Value m = 1; m < 13; ++m) {
    if (std::gcd(m, Value{35}) == 1) EXPECT_FALSE(criterion_two(s35, m)) << m;
  }
}

TEST(Criteria, Errors) {
  const ZsSequence s(35, {5, 10, 24, 31});
  EXPECT_THROW(criterion_one(s, 5), Error);
  EXPECT_THROW(criterion_two(s, 7), Error);
  const ZsSequence three(35, {5, 10, 20});
  try {
    criterion_one(three, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_sequence);
  }
  EXPECT_THROW(criterion_two(three, 1), Error);
}

TEST(Criteria, ImplyIndexOne) {
  for (Value n : {25, 35, 49, 55, 65, 77}) {
    for (const auto& s : enumerate_minimal4(n)) {
      bool any = false;
      for (Value m : units_stream(n)) {
        const bool c2 = criterion_two(s, m);
        if (c2) ASSERT_EQ(g_norm(s, n - m), Ratio(1, 1));
        any = any || c2 || criterion_one(s, m);
      }
      if (any) ASSERT_EQ(index_oracle(s).index_value, Ratio(1, 1)) << to_string(s);
    }
  }
}

TEST(SideCounts, HalfCountsOnNeitherSide) {
  const std::vector<Value> v{2, 4, 6, 7};
  const auto c = side_counts(v, 8);
  EXPECT_EQ(c.below, 1);
  EXPECT_EQ(c.above, 2);
  EXPECT_TRUE(at_most_one_side(v, 8));
}
