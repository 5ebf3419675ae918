#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gosperwalk/brownian.hpp"
#include "gosperwalk/errors.hpp"
#include "gosperwalk/parallel.hpp"
#include "gosperwalk/stats.hpp"

namespace gosperwalk {

namespace {

struct NamedDiagnostic {
  Diagnostic id;
  const char* name;
};

constexpr NamedDiagnostic kDiagnostics[] = {
    {Diagnostic::ArcsineLastZero, "arcsine_last_zero"},
    {Diagnostic::ReflectionIdentity, "reflection_identity"},
    {Diagnostic::ConditionalMean, "conditional_mean"},
    {Diagnostic::ArgminSymmetry, "argmin_symmetry"},
    {Diagnostic::Lipschitz, "lipschitz"},
};

constexpr std::size_t kMinSurvivors = 30;

double arcsine_cdf(double t) {
  return 2.0 / std::numbers::pi * std::asin(std::sqrt(std::clamp(t, 0.0, 1.0)));
}

std::size_t grid_index(double t, std::size_t steps) {
  return static_cast<std::size_t>(std::ceil(t * static_cast<double>(steps) - 1e-9));
}

// Runs fn(path, i) for paths i = first..first+count-1 under `seed`.
template <class Fn>
void for_paths(Law law, const DiagnosticParams& p, std::size_t first, std::size_t count,
               std::uint64_t seed, unsigned threads, Fn fn) {
  parallel_for(count, threads, [&](std::size_t i) {
    Stream stream = trial_stream(seed, first + i);
    fn(sample_path(law, p.steps, p.two_v, stream), i);
  });
}

Law require_law(const DiagnosticParams& p, Law natural, bool other_allowed, const char* name) {
  const Law law = p.law.value_or(natural);
  if (law != natural && !other_allowed) {
    throw InvalidInput(fmt::format("{} is defined for the {} law only", name, law_name(natural)));
  }
  return law;
}

}  // namespace

std::string diagnostic_name(Diagnostic d) {
  for (const auto& entry : kDiagnostics)
    if (entry.id == d) return entry.name;
  return "unknown";
}

std::vector<std::string> diagnostic_names() {
  std::vector<std::string> out;
  for (const auto& entry : kDiagnostics) out.emplace_back(entry.name);
  return out;
}

Diagnostic parse_diagnostic(const std::string& name) {
  for (const auto& entry : kDiagnostics)
    if (name == entry.name) return entry.id;
  throw InvalidInput(fmt::format("unknown diagnostic '{}'; valid names: {}", name,
                                 fmt::join(diagnostic_names(), ", ")));
}

DiagnosticReport run_diagnostic(Diagnostic which, const DiagnosticParams& params,
                                std::size_t trials, std::uint64_t seed) {
  if (trials < 100) throw InvalidInput("diagnostics need at least 100 trials");
  if (params.steps < 2) throw InvalidInput("diagnostics need at least 2 steps");
  const unsigned threads = params.threads > 0 ? params.threads : default_thread_count();
  const double t = params.t;
  const std::size_t n = params.steps;

  DiagnosticReport r;
  r.name = diagnostic_name(which);
  r.steps = n;
  r.trials = trials;
  r.seed = seed;
  r.t = t;

  auto need_interior_t = [&] {
    if (!(t > 0 && t < 1)) throw InvalidInput("t must lie strictly between 0 and 1");
  };

  switch (which) {
    case Diagnostic::ArcsineLastZero: {
      r.law = require_law(params, Law::Motion, false, "arcsine_last_zero");
      std::vector<double> zeros(trials);
      for_paths(r.law, params, 0, trials, seed, threads, [&](const DiscretePath& path, std::size_t i) {
        zeros[i] = path_functionals(path).last_zero;
      });
      r.statistic = stats::ks_statistic(zeros, arcsine_cdf);
      r.reference = arcsine_cdf(t);
      r.threshold = stats::ks_critical_value(params.alpha, static_cast<double>(trials));
      r.p_value = stats::ks_p_value(r.statistic, static_cast<double>(trials));
      r.samples = trials;
      r.pass = r.statistic < r.threshold;
      r.detail = "KS distance of last-zero times against (2/pi) asin(sqrt(t))";
      break;
    }

    case Diagnostic::ReflectionIdentity: {
      need_interior_t();
      r.law = require_law(params, Law::Motion, false, "reflection_identity");
      const std::size_t k = grid_index(t, n);
      std::vector<double> excess(trials), reflected(trials);
      for_paths(r.law, params, 0, trials, seed, threads, [&](const DiscretePath& path, std::size_t i) {
        const double low = *std::min_element(path.values.begin(), path.values.begin() + k + 1);
        excess[i] = path.values[k] - low;
      });
      for_paths(r.law, params, trials, trials, seed, threads,
                [&](const DiscretePath& path, std::size_t i) { reflected[i] = std::abs(path.values[k]); });
      r.statistic = stats::ks_two_sample_statistic(excess, reflected);
      const double n_eff = static_cast<double>(trials) / 2.0;
      r.p_value = stats::ks_p_value(r.statistic, n_eff);
      r.threshold = params.alpha;
      r.reference = 0;
      r.samples = 2 * trials;
      r.pass = *r.p_value > params.alpha;
      r.detail = "two-sample KS of w(t)-M*(t) against |w(t)| on disjoint path sets";
      break;
    }

    case Diagnostic::ConditionalMean: {
      need_interior_t();
      r.law = require_law(params, Law::Bridge, false, "conditional_mean");
      const std::size_t k = grid_index(t, n);
      std::vector<double> value(trials);
      std::vector<char> kept(trials, 0);
      for_paths(r.law, params, 0, trials, seed, threads, [&](const DiscretePath& path, std::size_t i) {
        const auto first_min = std::min_element(path.values.begin(), path.values.end());
        const auto tau = static_cast<std::size_t>(first_min - path.values.begin());
        if (tau > k) {
          kept[i] = 1;
          value[i] = path.values[k] - *std::min_element(path.values.begin(), path.values.begin() + k + 1);
        }
      });
      std::vector<double> survivors;
      for (std::size_t i = 0; i < trials; ++i)
        if (kept[i]) survivors.push_back(value[i]);
      if (survivors.size() < kMinSurvivors) {
        throw InsufficientData(
            fmt::format("conditional_mean kept {} paths, need at least {}", survivors.size(),
                        kMinSurvivors),
            survivors.size());
      }
      const auto est = stats::mean_and_se(survivors);
      r.statistic = est.mean;
      r.reference = 0.5 * std::sqrt(t * (1.0 - t)) * std::sqrt(params.two_v);
      r.threshold = params.tolerance;
      r.samples = survivors.size();
      const double rel = std::abs(est.mean - r.reference) / r.reference;
      r.pass = rel <= params.tolerance;
      r.detail = fmt::format("mean of w(t)-M*(t) given tau > t; std_error {:.6g}, relative error {:.6g}",
                             est.std_error, rel);
      break;
    }

    case Diagnostic::ArgminSymmetry: {
      r.law = require_law(params, Law::Bridge, false, "argmin_symmetry");
      std::vector<double> forward(trials), mirrored(trials);
      const double scale = 1.0 / static_cast<double>(n);
      for_paths(r.law, params, 0, trials, seed, threads, [&](const DiscretePath& path, std::size_t i) {
        const auto it = std::min_element(path.values.begin(), path.values.end());
        forward[i] = static_cast<double>(it - path.values.begin()) * scale;
      });
      for_paths(r.law, params, trials, trials, seed, threads, [&](const DiscretePath& path, std::size_t i) {
        const auto it = std::min_element(path.values.begin(), path.values.end());
        mirrored[i] = 1.0 - static_cast<double>(it - path.values.begin()) * scale;
      });
      r.statistic = stats::ks_two_sample_statistic(forward, mirrored);
      r.p_value = stats::ks_p_value(r.statistic, static_cast<double>(trials) / 2.0);
      r.threshold = params.alpha;
      r.samples = 2 * trials;
      r.pass = *r.p_value > params.alpha;
      r.detail = "two-sample KS of tau against 1 - tau on disjoint path sets";
      break;
    }

    case Diagnostic::Lipschitz: {
      r.law = require_law(params, Law::Motion, true, "lipschitz");
      if (!(params.epsilon > 0)) throw InvalidInput("epsilon must be positive");
      const double eps = params.epsilon;
      std::vector<double> gap(trials);
      for_paths(r.law, params, 0, trials, seed, threads, [&](const DiscretePath& path, std::size_t i) {
        // Perturbation with sup norm exactly eps: uniform in [-eps, eps]
        // with one coordinate pushed to the boundary.
        Stream noise = trial_stream(~seed, i);
        std::uniform_real_distribution<double> u(-eps, eps);
        std::uniform_int_distribution<std::size_t> pick(0, n);
        DiscretePath other = path;
        for (double& x : other.values) x += u(noise);
        const std::size_t edge = pick(noise);
        other.values[edge] = path.values[edge] + (u(noise) < 0 ? -eps : eps);
        gap[i] = std::abs(path_functionals(path).beta_star - path_functionals(other).beta_star);
      });
      r.statistic = *std::max_element(gap.begin(), gap.end());
      r.reference = 2.0 * eps;
      r.threshold = 2.0 * eps * (1.0 + 1e-12);
      r.samples = trials;
      r.pass = r.statistic <= r.threshold;
      r.detail = "max |beta*(w) - beta*(w + e)| over pairs with sup|e| = eps";
      break;
    }
  }
  return r;
}

}  // namespace gosperwalk
