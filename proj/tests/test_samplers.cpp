#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "gosperwalk/errors.hpp"
#include "gosperwalk/samplers.hpp"
#include "gosperwalk/stats.hpp"

using namespace gosperwalk;

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

// All compositions of n into m parts in lexicographic order.
std::vector<std::vector<Count>> compositions(std::size_t m, Count n) {
  std::vector<std::vector<Count>> out;
  std::vector<Count> v(m, 0);
  auto rec = [&](auto&& self, std::size_t pos, Count left) -> void {
    if (pos + 1 == m) {
      v[pos] = left;
      out.push_back(v);
      return;
    }
    for (Count x = left; x >= 0; --x) {
      v[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, n);
  return out;
}

// Chi-square p-value of `draws` samples of a composition-valued sampler
// against the exact probabilities `probs` over `comps`.
template <class Draw>
double composition_gof(const std::vector<std::vector<Count>>& comps,
                       const std::vector<double>& probs, std::size_t draws, Draw&& draw) {
  std::map<std::vector<Count>, std::size_t> index;
  for (std::size_t k = 0; k < comps.size(); ++k) index[comps[k]] = k;
  std::vector<double> observed(comps.size(), 0);
  for (std::size_t i = 0; i < draws; ++i) {
    const auto v = draw();
    const auto it = index.find(v);
    if (it == index.end()) ADD_FAILURE() << "draw outside the support";
    else observed[it->second] += 1;
  }
  return stats::chi_square_gof(observed, probs).p_value;
}

std::vector<double> multinomial_probs(const std::vector<std::vector<Count>>& comps, Count n) {
  std::vector<double> p;
  const double m = static_cast<double>(comps.front().size());
  for (const auto& c : comps) {
    double w = factorial(static_cast<int>(n)) * std::pow(m, -static_cast<double>(n));
    for (auto x : c) w /= factorial(static_cast<int>(x));
    p.push_back(w);
  }
  return p;
}

std::vector<double> product_probs(const std::vector<std::vector<Count>>& comps,
                                  const std::vector<double>& F) {
  std::vector<double> p;
  for (const auto& c : comps) {
    double w = 1;
    for (auto x : c) w *= static_cast<std::size_t>(x) < F.size() ? F[static_cast<std::size_t>(x)] : 0.0;
    p.push_back(w);
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace

TEST(Multinomial, SingleCell) {
  auto rng = trial_stream(1, 0);
  for (Count n : {0, 1, 7, 1000}) EXPECT_EQ(sample_multinomial(1, n, rng), std::vector<Count>{n});
  const auto c = sample_uniform_r(1, 9, rng);
  EXPECT_EQ(c.red, std::vector<Count>{9});
  EXPECT_EQ(c.blue, std::vector<Count>{9});
}

TEST(Multinomial, ConservesTotal) {
  auto rng = trial_stream(2, 0);
  for (int i = 0; i < 200; ++i) {
    const auto c = sample_uniform_r(1 + i % 37, i * 3, rng);
    EXPECT_EQ(c.total_red(), i * 3);
    EXPECT_EQ(c.total_blue(), i * 3);
  }
}

TEST(Multinomial, BinomialMarginal) {
  auto rng = trial_stream(3, 0);
  std::vector<double> observed(5, 0), probs(5);
  for (int k = 0; k <= 4; ++k)
    probs[k] = factorial(4) / (factorial(k) * factorial(4 - k)) * std::pow(1.0 / 3, k) *
               std::pow(2.0 / 3, 4 - k);
  for (int i = 0; i < 100000; ++i) observed[sample_multinomial(3, 4, rng)[0]] += 1;
  EXPECT_GT(stats::chi_square_gof(observed, probs).p_value, 1e-3);
}

TEST(Composition, TwoCellsOneBall) {
  auto rng = trial_stream(4, 0);
  const auto comps = compositions(2, 1);
  EXPECT_GT(composition_gof(comps, {0.5, 0.5}, 100000, [&] { return sample_composition(2, 1, rng); }),
            1e-3);
}

TEST(Composition, TwoCellsTwoBalls) {
  auto rng = trial_stream(5, 0);
  const auto comps = compositions(2, 2);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_GT(composition_gof(comps, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 100000,
                            [&] { return sample_composition(2, 2, rng); }),
            1e-3);
}

TEST(Composition, UniformOverFifteen) {
  auto rng = trial_stream(6, 0);
  const auto comps = compositions(3, 4);
  ASSERT_EQ(comps.size(), 15u);
  EXPECT_GT(composition_gof(comps, std::vector<double>(15, 1.0 / 15), 100000,
                            [&] { return sample_composition(3, 4, rng); }),
            1e-3);
}

TEST(Composition, ConservesTotal) {
  auto rng = trial_stream(7, 0);
  for (int i = 0; i < 200; ++i) {
    const auto c = sample_multiset_r(1 + i % 41, i * 5, rng);
    EXPECT_EQ(c.total_red(), i * 5);
    EXPECT_EQ(c.total_blue(), i * 5);
    for (auto x : c.red) EXPECT_GE(x, 0);
  }
}

TEST(Distribution, Validation) {
  EXPECT_THROW(Distribution::poisson(0), InvalidInput);
  EXPECT_THROW(Distribution::geometric(-1), InvalidInput);
  EXPECT_THROW(Distribution::custom({0.5, 0.4}), InvalidInput);
  EXPECT_THROW(Distribution::custom({1.2, -0.2}), InvalidInput);
  EXPECT_THROW(Distribution::custom({}), InvalidInput);
  // support {0, 2} is periodic
  EXPECT_THROW(Distribution::custom({0.5, 0.0, 0.5}), InvalidInput);
  EXPECT_NO_THROW(Distribution::custom({0.0, 0.0, 0.5, 0.5}));
  EXPECT_NO_THROW(Distribution::custom({1.0}));
}

TEST(Distribution, Moments) {
  EXPECT_DOUBLE_EQ(Distribution::poisson(2.5).variance(), 2.5);
  EXPECT_DOUBLE_EQ(Distribution::geometric(2).variance(), 6.0);
  const auto g = Distribution::geometric(1);
  EXPECT_DOUBLE_EQ(g.pmf(0), 0.5);
  EXPECT_DOUBLE_EQ(g.pmf(3), 1.0 / 16);
  const auto c = Distribution::custom({0.25, 0.5, 0.25, 0.0});
  EXPECT_DOUBLE_EQ(c.mean(), 1.0);
  EXPECT_DOUBLE_EQ(c.variance(), 0.5);
  EXPECT_EQ(c.max_support(), 2);
  EXPECT_EQ(c.pmf(7), 0.0);
  EXPECT_EQ(Distribution::poisson(1).max_support(), -1);
}

TEST(Iid, PointMassAtZero) {
  auto rng = trial_stream(8, 0);
  const auto c = sample_iid(Distribution::custom({1.0}), 50, rng);
  EXPECT_EQ(c.total_red(), 0);
  EXPECT_EQ(c.total_blue(), 0);
}

TEST(Iid, PoissonMean) {
  auto rng = trial_stream(9, 0);
  const auto c = sample_iid(Distribution::poisson(1), 100000, rng);
  const double mean = static_cast<double>(c.total_red()) / 100000;
  EXPECT_LT(std::abs(mean - 1.0), 3 * std::sqrt(1.0 / 100000));
}

TEST(Iid, GeometricZeroMass) {
  auto rng = trial_stream(10, 0);
  const auto c = sample_iid(Distribution::geometric(1), 100000, rng);
  const double p0 = static_cast<double>(std::count(c.red.begin(), c.red.end(), 0)) / 100000;
  EXPECT_LT(std::abs(p0 - 0.5), 3 * std::sqrt(0.25 / 100000));
}

TEST(Iid, VarianceFormulas) {
  for (const auto& F : {Distribution::poisson(1.7), Distribution::geometric(1.3),
                        Distribution::custom({0.1, 0.6, 0.0, 0.3})}) {
    auto rng = trial_stream(11, 0);
    const auto c = sample_iid(F, 500000, rng);
    std::vector<double> x;
    for (auto v : c.red) x.push_back(static_cast<double>(v));
    for (auto v : c.blue) x.push_back(static_cast<double>(v));
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double m2 = 0, m4 = 0;
    for (double v : x) {
      const double d = v - mean;
      m2 += d * d;
      m4 += d * d * d * d;
    }
    m2 /= n;
    m4 /= n;
    const double se = std::sqrt((m4 - m2 * m2) / n);
    EXPECT_LT(std::abs(m2 - F.variance()), 3 * se) << F.name();
  }
}

TEST(Conditioned, PoissonIsMultinomial) {
  auto rng = trial_stream(12, 0);
  const auto comps = compositions(3, 4);
  const ConditionedTable table(Distribution::poisson(1), 3, 4);
  EXPECT_GT(composition_gof(comps, multinomial_probs(comps, 4), 100000,
                            [&] { return table.sample_vector(rng); }),
            1e-3);
}

TEST(Conditioned, GeometricIsUniform) {
  auto rng = trial_stream(13, 0);
  const auto comps = compositions(3, 4);
  const ConditionedTable table(Distribution::geometric(2), 3, 4);
  EXPECT_GT(composition_gof(comps, std::vector<double>(15, 1.0 / 15), 100000,
                            [&] { return table.sample_vector(rng); }),
            1e-3);
}

TEST(Conditioned, CustomMatchesProductLaw) {
  auto rng = trial_stream(14, 0);
  const std::vector<double> F{0.2, 0.5, 0.0, 0.3};
  auto comps = compositions(4, 5);
  std::erase_if(comps, [&](const auto& c) {
    return std::any_of(c.begin(), c.end(), [&](Count x) { return x >= 4 || x == 2; });
  });
  const ConditionedTable table(Distribution::custom(F), 4, 5);
  EXPECT_GT(composition_gof(comps, product_probs(comps, F), 100000,
                            [&] { return table.sample_vector(rng); }),
            1e-3);
}

TEST(Conditioned, AutoUsesClosedForms) {
  auto rng = trial_stream(15, 0);
  const auto comps = compositions(3, 4);
  EXPECT_GT(composition_gof(comps, multinomial_probs(comps, 4), 100000,
                            [&] { return sample_conditioned(Distribution::poisson(3), 3, 4, rng).red; }),
            1e-3);
  EXPECT_GT(composition_gof(comps, std::vector<double>(15, 1.0 / 15), 100000,
                            [&] { return sample_conditioned(Distribution::geometric(0.5), 3, 4, rng).blue; }),
            1e-3);
}

TEST(Conditioned, SumsExact) {
  auto rng = trial_stream(16, 0);
  const auto F = Distribution::custom({0.3, 0.3, 0.4});
  for (int i = 0; i < 300; ++i) {
    const std::size_t m = 1 + i % 13;
    const Count n = i % static_cast<int>(2 * m + 1);
    const auto c = sample_conditioned(F, m, n, rng);
    ASSERT_EQ(c.total_red(), n);
    ASSERT_EQ(c.total_blue(), n);
  }
  const auto big = sample_conditioned(Distribution::poisson(1), 500, 500, rng,
                                      ConditionedMethod::General);
  EXPECT_EQ(big.total_red(), 500);
  EXPECT_EQ(big.total_blue(), 500);
}

TEST(Conditioned, UnattainableTotal) {
  EXPECT_THROW(ConditionedTable(Distribution::custom({0.5, 0.5}), 2, 5), InvalidInput);
  EXPECT_THROW(ConditionedTable(Distribution::custom({0.5, 0.5}), 2, -1), InvalidInput);
  EXPECT_THROW(ConditionedTable(Distribution::custom({1.0}), 3, 1), InvalidInput);
  EXPECT_THROW(ConditionedTable(Distribution::poisson(1), 100000, 100000), InvalidInput);
}

TEST(ModelSpec, LabelsAndValidation) {
  ModelSpec s;
  s.model = Model::UniformR;
  s.m = 10;
  s.lambda = 1.5;
  EXPECT_EQ(s.label(), "uniform-r");
  EXPECT_EQ(s.resolved_n(), 15);
  s.model = Model::Iid;
  EXPECT_THROW(s.validate(), InvalidInput);
  s.F = Distribution::poisson(1);
  EXPECT_NO_THROW(s.validate());
  EXPECT_EQ(s.label(), "iid-poisson");
  s.model = Model::Conditioned;
  s.F = Distribution::geometric(1);
  EXPECT_EQ(s.label(), "cond-geometric");
  s.m = 0;
  EXPECT_THROW(s.validate(), InvalidInput);
}

TEST(ModelSampler, Deterministic) {
  ModelSpec s;
  s.model = Model::Conditioned;
  s.F = Distribution::custom({0.3, 0.3, 0.4});
  s.m = 40;
  s.n = 37;
  const ModelSampler a(s), b(s);
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto r1 = trial_stream(99, i), r2 = trial_stream(99, i);
    EXPECT_EQ(a.sample(r1), b.sample(r2));
  }
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 17), derive_seed(5, 17));
  // splitmix64 finalizer of 0x9E3779B97F4A7C15 (first splitmix64 output for state 0)
  EXPECT_EQ(mix64(0x9E3779B97F4A7C15ull), 0xE220A8397B1DCDAFull);
}
