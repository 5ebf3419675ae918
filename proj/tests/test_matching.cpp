#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gosperwalk/errors.hpp"
#include "gosperwalk/matching.hpp"
#include "gosperwalk/walk.hpp"
#include "oracles.hpp"

using namespace gosperwalk;

namespace {

RootConfig cfg(std::vector<Count> a, std::vector<Count> b) { return RootConfig(std::move(a), std::move(b)); }

Matching make(std::vector<BallPair> pairs, std::vector<std::size_t> red = {},
              std::vector<std::size_t> blue = {}) {
  Matching m{std::move(pairs), std::move(red), std::move(blue)};
  m.canonicalize();
  return m;
}

}  // namespace

TEST(Admissible, PairMustPointRight) {
  EXPECT_FALSE(is_admissible(make({{2, 1}}), cfg({0, 1}, {1, 0})));
}

TEST(Admissible, UnmatchedRedLeftOfBlue) {
  EXPECT_FALSE(is_admissible(make({}, {2}, {4}), cfg({0, 1, 0, 0}, {0, 0, 0, 1})));
}

TEST(Admissible, SimplePair) {
  EXPECT_TRUE(is_admissible(make({{1, 2}}), cfg({1, 0}, {0, 1})));
}

TEST(Admissible, ConservationChecked) {
  EXPECT_FALSE(is_admissible(make({{1, 2}}), cfg({2, 0}, {0, 1})));
  EXPECT_FALSE(is_admissible(make({{1, 2}}, {}, {2}), cfg({1, 0}, {0, 1})));
  EXPECT_FALSE(is_admissible(make({{1, 3}}), cfg({1, 0}, {0, 1})));
}

TEST(Profile, HandCount) {
  const auto p = weight_and_profile(make({{2, 2}, {1, 3}}), 3);
  EXPECT_EQ(p.weight, 2);
  EXPECT_EQ(p.d[1], 1);
  EXPECT_EQ(p.d[2], 1);
}

TEST(Profile, Empty) {
  const auto p = weight_and_profile(Matching{}, 5);
  EXPECT_EQ(p.weight, 0);
  for (auto x : p.d) EXPECT_EQ(x, 0);
}

TEST(Profile, SinglePair) {
  const auto p = weight_and_profile(make({{1, 2}}), 2);
  EXPECT_EQ(p.weight, 1);
  EXPECT_EQ(p.d[1], 1);
}

TEST(Stack, BackwardPassNesting) {
  const auto m = stack_matching(cfg({1, 1, 0}, {0, 1, 1}));
  EXPECT_EQ(m, make({{2, 2}, {1, 3}}));
  EXPECT_EQ(weight_and_profile(m, 3).weight, 2);
}

TEST(Stack, ForwardPair) {
  EXPECT_EQ(stack_matching(cfg({1, 0}, {0, 1})), make({{1, 2}}));
}

TEST(Stack, SameUrn) {
  EXPECT_EQ(stack_matching(cfg({1}, {1})), make({{1, 1}}));
}

TEST(Stack, MixedExample) {
  const auto m = stack_matching(cfg({0, 2, 0, 0}, {1, 0, 0, 1}));
  EXPECT_EQ(m, make({{2, 4}}, {2}, {1}));
}

TEST(BruteForce, HandExamples) {
  EXPECT_EQ(brute_force_beta(cfg({0, 2, 0, 0}, {1, 0, 0, 1})), 2);
  EXPECT_EQ(brute_force_beta(cfg({1, 0}, {0, 1})), 1);
  EXPECT_EQ(brute_force_beta(cfg({0, 1}, {1, 0})), 0);
}

TEST(BruteForce, RefusesAboveCap) {
  EXPECT_THROW(brute_force_beta(cfg({6, 0}, {0, 5})), SizeError);
  EXPECT_THROW(brute_force_beta(cfg({2, 0}, {0, 2}), 3), SizeError);
  EXPECT_NO_THROW(brute_force_beta(cfg({2, 0}, {0, 2}), 4));
}

TEST(MatchingProperty, ExhaustiveAgreementSmall) {
  // m <= 4 with colour totals <= 4, against a labelled-ball oracle.
  std::size_t count = 0;
  oracle::for_each_config(4, 4, [&](const RootConfig& c) {
    const Count want = oracle::labelled_min_weight(c);
    const auto stack = stack_matching(c);
    ASSERT_TRUE(is_admissible(stack, c));
    ASSERT_EQ(weight_and_profile(stack, c.m()).weight, want);
    ASSERT_EQ(brute_force_beta(c), want);
    ASSERT_EQ(compute_walk(c).beta, want);
    ++count;
  });
  EXPECT_EQ(count, 25u + 225u + 1225u + 4900u);
}

TEST(MatchingProperty, StackProfileEqualsExcess) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto c = oracle::random_config(rng, 40, 4);
    const auto stack = stack_matching(c);
    ASSERT_TRUE(is_admissible(stack, c));
    ASSERT_EQ(weight_and_profile(stack, c.m()).d, oracle::naive_walk(c).I);
  }
}

TEST(MatchingProperty, ProfilesDominateExcess) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = oracle::random_config(rng, 5, 2);
    if (c.total_red() + c.total_blue() > 8) continue;
    const auto I = oracle::naive_walk(c).I;
    std::size_t visited = 0;
    for_each_admissible(c, 8, [&](const Matching& m) {
      ASSERT_TRUE(is_admissible(m, c));
      const auto p = weight_and_profile(m, c.m());
      for (std::size_t t = 1; t < c.m(); ++t) ASSERT_GE(p.d[t], I[t]);
      ++visited;
    });
    ASSERT_GE(visited, 1u);
  }
}

TEST(MatchingProperty, EnumerationHasNoDuplicates) {
  const auto c = cfg({1, 2, 0}, {0, 1, 2});
  std::set<std::vector<std::size_t>> seen;
  for_each_admissible(c, 10, [&](const Matching& m) {
    std::vector<std::size_t> key;
    for (auto p : m.pairs) key.insert(key.end(), {p.red, p.blue});
    key.push_back(0);
    key.insert(key.end(), m.unmatched_red.begin(), m.unmatched_red.end());
    key.push_back(0);
    key.insert(key.end(), m.unmatched_blue.begin(), m.unmatched_blue.end());
    EXPECT_TRUE(seen.insert(key).second);
  });
  EXPECT_GT(seen.size(), 1u);
}
