#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gosperwalk/rng.hpp"
#include "gosperwalk/root_config.hpp"

namespace gosperwalk {

/// Law F on the nonnegative integers: Poisson(mean), geometric with the given
/// mean (P(k) = (1-q) q^k, q = mean/(1+mean)), or a finite pmf table.
///
/// Construction rejects laws whose support has GCD > 1. The point mass at 0
/// (support GCD 0) is accepted as a degenerate law for the unconditioned
/// model.
class Distribution {
 public:
  enum class Kind { Poisson, Geometric, Custom };

  static Distribution poisson(double mean);
  static Distribution geometric(double mean);
  /// pmf[k] = P(k) for k = 0..K. Entries must be nonnegative and sum to 1
  /// within 1e-12.
  static Distribution custom(std::vector<double> pmf);

  Kind kind() const noexcept { return kind_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return variance_; }

  /// P(k); zero outside the support.
  double pmf(Count k) const;
  /// Largest support point for custom laws; -1 for infinite support.
  Count max_support() const noexcept;

  /// One draw; intended for tests and small samples. Bulk samplers build
  /// their own std:: distribution objects.
  Count draw(Stream& stream) const;

  const std::vector<double>& table() const noexcept { return pmf_; }
  std::string name() const;

 private:
  Distribution(Kind kind, double mean, double variance, std::vector<double> pmf);

  Kind kind_;
  double mean_;
  double variance_;
  std::vector<double> pmf_;  // custom only
  std::vector<double> cdf_;  // custom only
};

}  // namespace gosperwalk
