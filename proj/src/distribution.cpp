#include "gosperwalk/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "gosperwalk/errors.hpp"

namespace gosperwalk {

Distribution::Distribution(Kind kind, double mean, double variance, std::vector<double> pmf)
    : kind_(kind), mean_(mean), variance_(variance), pmf_(std::move(pmf)) {
  if (!pmf_.empty()) {
    cdf_.resize(pmf_.size());
    std::partial_sum(pmf_.begin(), pmf_.end(), cdf_.begin());
  }
}

Distribution Distribution::poisson(double mean) {
  if (!(mean > 0) || !std::isfinite(mean)) throw InvalidInput("poisson mean must be positive");
  return Distribution(Kind::Poisson, mean, mean, {});
}

Distribution Distribution::geometric(double mean) {
  if (!(mean > 0) || !std::isfinite(mean)) throw InvalidInput("geometric mean must be positive");
  return Distribution(Kind::Geometric, mean, mean * (mean + 1.0), {});
}

Distribution Distribution::custom(std::vector<double> pmf) {
  if (pmf.empty()) throw InvalidInput("custom pmf is empty");
  double total = 0;
  std::size_t support_gcd = 0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    if (!(pmf[k] >= 0) || !std::isfinite(pmf[k]))
      throw InvalidInput(fmt::format("custom pmf entry {} is not a probability", k));
    total += pmf[k];
    if (pmf[k] > 0) support_gcd = std::gcd(support_gcd, k);
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidInput(fmt::format("custom pmf sums to {}, expected 1", total));
  if (support_gcd > 1)
    throw InvalidInput(fmt::format("custom pmf support has GCD {}, expected 1", support_gcd));

  while (pmf.size() > 1 && pmf.back() == 0) pmf.pop_back();
  double mean = 0, second = 0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    const double x = static_cast<double>(k);
    mean += x * pmf[k];
    second += x * x * pmf[k];
  }
  return Distribution(Kind::Custom, mean, std::max(0.0, second - mean * mean), std::move(pmf));
}

double Distribution::pmf(Count k) const {
  if (k < 0) return 0;
  const double x = static_cast<double>(k);
  switch (kind_) {
    case Kind::Poisson:
      return std::exp(x * std::log(mean_) - mean_ - std::lgamma(x + 1.0));
    case Kind::Geometric: {
      const double q = mean_ / (1.0 + mean_);
      return (1.0 - q) * std::pow(q, x);
    }
    case Kind::Custom:
      return static_cast<std::size_t>(k) < pmf_.size() ? pmf_[static_cast<std::size_t>(k)] : 0.0;
  }
  return 0;
}

Count Distribution::max_support() const noexcept {
  return kind_ == Kind::Custom ? static_cast<Count>(pmf_.size()) - 1 : Count{-1};
}

Count Distribution::draw(Stream& stream) const {
  switch (kind_) {
    case Kind::Poisson:
      return std::poisson_distribution<Count>(mean_)(stream);
    case Kind::Geometric:
      return std::geometric_distribution<Count>(1.0 / (1.0 + mean_))(stream);
    case Kind::Custom: {
      const double u = std::generate_canonical<double, 64>(stream) * cdf_.back();
      const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
      return std::min<Count>(static_cast<Count>(it - cdf_.begin()),
                             static_cast<Count>(pmf_.size()) - 1);
    }
  }
  return 0;
}

std::string Distribution::name() const {
  switch (kind_) {
    case Kind::Poisson:
      return fmt::format("poisson({})", mean_);
    case Kind::Geometric:
      return fmt::format("geometric({})", mean_);
    case Kind::Custom:
      return fmt::format("custom[{}]", pmf_.size());
  }
  return {};
}

}  // namespace gosperwalk
