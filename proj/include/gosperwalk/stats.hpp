#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gosperwalk::stats {

/// Pairwise (cascade) summation with a fixed split order; the result depends
/// only on the input sequence.
double pairwise_sum(std::span<const double> values);

struct MeanSe {
  double mean = 0;
  double std_error = 0;  // sample standard deviation / sqrt(n)
  double std_dev = 0;
};

/// Needs at least two values for a standard error; with one value it is 0.
MeanSe mean_and_se(std::span<const double> values);

struct ChiSquareResult {
  double statistic = 0;
  double dof = 0;
  double p_value = 1;
};

/// Pearson goodness of fit of `observed` counts against cell probabilities.
ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> probabilities);

/// sup |F_n - F| against a continuous reference CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

/// sup |F_n - G_m| between two samples.
double ks_two_sample_statistic(std::vector<double> x, std::vector<double> y);

/// Kolmogorov survival function Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2).
double kolmogorov_q(double t);

/// Asymptotic p-value of a KS distance for effective sample size n_eff
/// (n for one sample, n m / (n + m) for two), with Stephens' small-sample
/// correction.
double ks_p_value(double distance, double n_eff);

/// Distance whose ks_p_value equals alpha at sample size n_eff.
double ks_critical_value(double alpha, double n_eff);

}  // namespace gosperwalk::stats
