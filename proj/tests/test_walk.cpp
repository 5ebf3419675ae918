#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "gosperwalk/errors.hpp"
#include "gosperwalk/walk.hpp"
#include "oracles.hpp"

using namespace gosperwalk;

namespace {

RootConfig cfg(std::vector<Count> a, std::vector<Count> b) { return RootConfig(std::move(a), std::move(b)); }

}  // namespace

TEST(Walk, SingleRedBeforeBlue) {
  const auto w = compute_walk(cfg({1, 0}, {0, 1}));
  EXPECT_EQ(w.S, (std::vector<Count>{0, 1, 0}));
  EXPECT_EQ(w.tau, 0u);
  EXPECT_EQ(w.I[1], 1);
  EXPECT_EQ(w.beta, 1);
}

TEST(Walk, BlueBeforeRedIsFree) {
  const auto w = compute_walk(cfg({0, 1}, {1, 0}));
  EXPECT_EQ(w.S, (std::vector<Count>{0, -1, 0}));
  EXPECT_EQ(w.tau, 1u);
  EXPECT_EQ(w.beta, 0);
}

TEST(Walk, EqualVectorsGiveZeroWalk) {
  const auto w = compute_walk(cfg({2, 3, 1}, {2, 3, 1}));
  EXPECT_EQ(w.S, (std::vector<Count>{0, 0, 0, 0}));
  EXPECT_EQ(w.beta, 0);
}

TEST(Walk, SplicedExcess) {
  const auto w = compute_walk(cfg({0, 2, 0, 0}, {1, 0, 0, 1}));
  EXPECT_EQ(w.S, (std::vector<Count>{0, -1, 1, 1, 0}));
  EXPECT_EQ(w.tau, 1u);
  EXPECT_EQ(w.Y[1], 0);
  EXPECT_EQ(w.Ytilde[2], 1);
  EXPECT_EQ(w.Ytilde[3], 1);
  EXPECT_EQ(w.beta, 2);
}

TEST(Walk, RejectsEmptyAndMismatched) {
  EXPECT_THROW(compute_walk(cfg({}, {})), InvalidInput);
  EXPECT_THROW(compute_walk(cfg({1}, {0, 1})), InvalidInput);
  EXPECT_THROW(compute_walk(cfg({-1}, {0})), InvalidInput);
  EXPECT_THROW(walk_beta(cfg({}, {})), InvalidInput);
}

TEST(Walk, SingleUrnHasNoInterior) {
  EXPECT_EQ(compute_walk(cfg({5}, {2})).beta, 0);
  EXPECT_EQ(walk_beta(cfg({5}, {2})), 0);
}

TEST(Walk, OverflowIsReported) {
  const Count big = std::numeric_limits<Count>::max() / 3;
  EXPECT_THROW(compute_walk(cfg({big, big, big, big, 0, 0}, {0, 0, 0, 0, big, big})),
               std::overflow_error);
}

TEST(WalkProperty, MatchesNaiveDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto c = oracle::random_config(rng, 40, trial % 3 == 0 ? 7 : 3);
    const auto want = oracle::naive_walk(c);
    const auto got = compute_walk(c);
    ASSERT_EQ(got.S, want.S);
    ASSERT_EQ(got.tau, want.tau);
    ASSERT_EQ(got.I, want.I);
    ASSERT_EQ(got.beta, want.beta);
    ASSERT_EQ(walk_beta(c), want.beta);
  }
}

TEST(WalkProperty, TauIsFirstGlobalMinimum) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto c = oracle::random_config(rng, 30, 2);
    const auto w = compute_walk(c);
    for (std::size_t j = 0; j < w.tau; ++j) ASSERT_GT(w.S[j], w.S[w.tau]);
    for (std::size_t j = w.tau; j < w.S.size(); ++j) ASSERT_GE(w.S[j], w.S[w.tau]);
    ASSERT_EQ(w.I[w.tau], 0);
  }
}

TEST(WalkProperty, ReversalDuality) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto c = oracle::random_config(rng, 50, 4);
    ASSERT_EQ(compute_walk(c).beta, compute_walk(c.reversed_dual()).beta);
  }
}

TEST(WalkProperty, EqualColoursGiveZero) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    auto c = oracle::random_config(rng, 60, 9);
    c.blue = c.red;
    ASSERT_EQ(compute_walk(c).beta, 0);
  }
}

TEST(WalkProperty, LargeWalkFastPathAgrees) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_config(rng, 20000, 6);
    ASSERT_EQ(walk_beta(c), compute_walk(c).beta);
  }
}
