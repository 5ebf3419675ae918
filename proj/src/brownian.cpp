#include "gosperwalk/brownian.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "gosperwalk/errors.hpp"
#include "gosperwalk/parallel.hpp"
#include "gosperwalk/stats.hpp"

namespace gosperwalk {

std::string law_name(Law law) { return law == Law::Motion ? "motion" : "bridge"; }

Law parse_law(const std::string& name) {
  if (name == "motion") return Law::Motion;
  if (name == "bridge") return Law::Bridge;
  throw InvalidInput("unknown law '" + name + "', expected motion or bridge");
}

DiscretePath sample_path(Law law, std::size_t steps, double two_v, Stream& stream) {
  if (steps < 2) throw InvalidInput("a path needs at least 2 steps");
  if (!(two_v > 0)) throw InvalidInput("twoV must be positive");
  DiscretePath path;
  path.two_v = two_v;
  path.values.resize(steps + 1);
  std::normal_distribution<double> increment(0.0, std::sqrt(two_v / static_cast<double>(steps)));
  double level = 0;
  path.values[0] = 0;
  for (std::size_t k = 1; k <= steps; ++k) {
    level += increment(stream);
    path.values[k] = level;
  }
  if (law == Law::Bridge) {
    kernels::active_kernels().detrend_f64(path.values.data(), path.values.size());
    path.values.back() = 0.0;
  }
  return path;
}

PathStats path_functionals(const DiscretePath& path) {
  const auto& v = path.values;
  const std::size_t n = path.steps();
  PathStats out;
  if (v.empty()) return out;

  out.Mstar.resize(n + 1);
  out.Mtildestar.resize(n + 1);
  out.Mstar[0] = v[0];
  for (std::size_t k = 1; k <= n; ++k) out.Mstar[k] = std::min(out.Mstar[k - 1], v[k]);
  out.Mtildestar[n] = v[n];
  for (std::size_t k = n; k-- > 0;) out.Mtildestar[k] = std::min(out.Mtildestar[k + 1], v[k]);

  out.tau = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (v[k] < v[out.tau]) out.tau = k;

  out.I.assign(n + 1, 0.0);
  double first = 0, second = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (k <= out.tau) {
      out.I[k] = v[k] - out.Mstar[k];
      first += out.I[k];
    } else {
      out.I[k] = v[k] - out.Mtildestar[k];
      second += out.I[k];
    }
  }
  const double scale = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;
  out.d1 = first * scale;
  out.d2 = second * scale;
  out.beta_star = (first + second) * scale;

  for (std::size_t k = n; k >= 1; --k) {
    if (v[k] == 0.0 || v[k] * v[k - 1] < 0.0) {
      out.last_zero = static_cast<double>(k) * scale;
      break;
    }
  }
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  out.span = *hi - *lo;
  return out;
}

BetaStarParts beta_star_parts(std::span<const double> values, const kernels::KernelTable& k) {
  BetaStarParts out;
  const std::size_t size = values.size();
  if (size < 3) return out;
  const std::size_t n = size - 1;
  std::vector<double> pmin(size), smin(size);
  k.prefix_min_f64(values.data(), pmin.data(), size);
  k.suffix_min_f64(values.data(), smin.data(), size);

  // The prefix minimum is nonincreasing; it first reaches the global
  // minimum at the first argmin.
  const double lowest = pmin[n];
  out.tau = static_cast<std::size_t>(
      std::partition_point(pmin.begin(), pmin.end(), [&](double x) { return x > lowest; }) -
      pmin.begin());

  const std::size_t split = std::min(out.tau, n - 1);  // last index of the first part
  const double first = split >= 1 ? k.excess_sum_f64(values.data() + 1, pmin.data() + 1,
                                                      smin.data() + 1, split)
                                  : 0.0;
  const double second = split + 1 <= n - 1
                            ? k.excess_sum_f64(values.data() + split + 1, pmin.data() + split + 1,
                                               smin.data() + split + 1, n - 1 - split)
                            : 0.0;
  const double scale = 1.0 / static_cast<double>(n);
  out.d1 = first * scale;
  out.d2 = second * scale;
  out.beta_star = (first + second) * scale;
  return out;
}

DiscretePath embed_walk(const WalkStats& stats, std::size_t m) {
  if (stats.S.size() != m + 1) throw InvalidInput("walk length does not match m");
  DiscretePath path;
  path.values.resize(m + 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t k = 0; k <= m; ++k) path.values[k] = static_cast<double>(stats.S[k]) * scale;
  return path;
}

DiscretePath refine_midpoints(const DiscretePath& path, Stream& stream) {
  const std::size_t n = path.steps();
  DiscretePath out;
  out.two_v = path.two_v;
  out.values.resize(2 * n + 1);
  std::normal_distribution<double> bump(
      0.0, std::sqrt(path.two_v / (4.0 * static_cast<double>(n))));
  for (std::size_t k = 0; k < n; ++k) {
    out.values[2 * k] = path.values[k];
    out.values[2 * k + 1] = 0.5 * (path.values[k] + path.values[k + 1]) + bump(stream);
  }
  out.values[2 * n] = path.values[n];
  return out;
}

double beta_star_reference(Law law, double two_v) {
  const double v = two_v / 2.0;
  if (law == Law::Motion) return (2.0 / 3.0) * std::sqrt(v / std::numbers::pi);
  return std::numbers::pi / 16.0 * std::sqrt(2.0 * v);
}

BrownianEstimate estimate_beta_star(Law law, std::size_t steps, double two_v,
                                    std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (trials < 2) throw InvalidInput("need at least 2 trials");
  if (threads == 0) threads = default_thread_count();
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> beta(trials), d1(trials), d2(trials), diff(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Stream stream = trial_stream(seed, i);
    const DiscretePath path = sample_path(law, steps, two_v, stream);
    const BetaStarParts parts = beta_star_parts(path.values);
    beta[i] = parts.beta_star;
    d1[i] = parts.d1;
    d2[i] = parts.d2;
    diff[i] = parts.d1 - parts.d2;
  });

  BrownianEstimate out;
  out.law = law;
  out.steps = steps;
  out.two_v = two_v;
  out.trials = trials;
  out.seed = seed;
  const auto b = stats::mean_and_se(beta);
  const auto s1 = stats::mean_and_se(d1);
  const auto s2 = stats::mean_and_se(d2);
  out.mean = b.mean;
  out.std_error = b.std_error;
  out.reference = beta_star_reference(law, two_v);
  out.d1_mean = s1.mean;
  out.d1_std_error = s1.std_error;
  out.d1_reference = out.reference / 2.0;
  out.d2_mean = s2.mean;
  out.d2_std_error = s2.std_error;
  out.split_diff_std_error = stats::mean_and_se(diff).std_error;
  out.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace gosperwalk
