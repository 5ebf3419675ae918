#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gosperwalk/samplers.hpp"

namespace gosperwalk {

/// One Monte Carlo estimate of E beta for a model at a fixed m.
struct EstimateReport {
  ModelSpec model;
  std::size_t m = 0;
  std::optional<Count> n;  // absent for the unconditioned model
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_beta = 0;
  double std_error = 0;
  double normalized = 0;  // mean_beta / m^{3/2}
  double reference = 0;
  double z_score = 0;     // (normalized - reference) / (std_error / m^{3/2})
  double wall_time = 0;   // seconds
};

/// Asymptotic constant c in E beta ~ c m^{3/2}:
///   uniform-R      pi sqrt(2 lambda) / 16
///   multiset-R     pi sqrt(2 lambda (lambda + 1)) / 16
///   iid(F)         (2/3) sqrt(V / pi)
///   conditioned(F) (pi sqrt(2) / 16) sqrt(V)
/// Throws InvalidInput when the model lacks the parameters it needs.
double reference_constant(const ModelSpec& model);

struct ExperimentOptions {
  unsigned threads = 0;  // 0: default_thread_count()
  ConditionedMethod method = ConditionedMethod::Auto;
};

/// Draws `trials` configurations (trial i from trial_stream(seed, i)) and
/// averages walk_beta. Bitwise deterministic for fixed (model, trials, seed)
/// regardless of thread count.
EstimateReport run_experiment(const ModelSpec& model, std::size_t trials, std::uint64_t seed,
                              const ExperimentOptions& options = {});

/// One report per m in `m_list` (nonempty, strictly increasing), each with
/// n = round(lambda m) where the model uses n and the same master seed.
std::vector<EstimateReport> sweep(const ModelSpec& model_template,
                                  const std::vector<std::size_t>& m_list, std::size_t trials,
                                  std::uint64_t seed, const ExperimentOptions& options = {});

}  // namespace gosperwalk
