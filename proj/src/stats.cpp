#include "gosperwalk/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "gosperwalk/errors.hpp"

namespace gosperwalk::stats {

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 16;
  if (values.size() <= kLeaf) {
    double total = 0;
    for (double v : values) total += v;
    return total;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MeanSe mean_and_se(std::span<const double> values) {
  MeanSe out;
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  out.mean = pairwise_sum(values) / n;
  if (values.size() < 2) return out;
  std::vector<double> sq(values.size());
  std::transform(values.begin(), values.end(), sq.begin(),
                 [&](double v) { return (v - out.mean) * (v - out.mean); });
  out.std_dev = std::sqrt(pairwise_sum(sq) / (n - 1));
  out.std_error = out.std_dev / std::sqrt(n);
  return out;
}

ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.size() < 2)
    throw InvalidInput("chi-square needs matching cell vectors with at least two cells");
  const double total = pairwise_sum(observed);
  ChiSquareResult out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probabilities[i];
    if (!(expected > 0)) throw InvalidInput("chi-square cell has zero expectation");
    const double diff = observed[i] - expected;
    out.statistic += diff * diff / expected;
  }
  out.dof = static_cast<double>(observed.size() - 1);
  boost::math::chi_squared dist(out.dof);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw InvalidInput("KS test needs a nonempty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample_statistic(std::vector<double> x, std::vector<double> y) {
  if (x.empty() || y.empty()) throw InvalidInput("KS test needs nonempty samples");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

double kolmogorov_q(double t) {
  if (t < 0.2) return 1.0;
  double sum = 0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {
double stephens_scale(double n_eff) {
  const double root = std::sqrt(n_eff);
  return root + 0.12 + 0.11 / root;
}
}  // namespace

double ks_p_value(double distance, double n_eff) {
  return kolmogorov_q(stephens_scale(n_eff) * distance);
}

double ks_critical_value(double alpha, double n_eff) {
  if (!(alpha > 0 && alpha < 1)) throw InvalidInput("alpha must lie in (0, 1)");
  double lo = 0.2, hi = 10.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (kolmogorov_q(mid) > alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) / stephens_scale(n_eff);
}

}  // namespace gosperwalk::stats
