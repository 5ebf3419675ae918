#include "gosperwalk/harness.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "gosperwalk/errors.hpp"
#include "gosperwalk/parallel.hpp"
#include "gosperwalk/stats.hpp"
#include "gosperwalk/walk.hpp"

namespace gosperwalk {

double reference_constant(const ModelSpec& model) {
  constexpr double pi = std::numbers::pi;
  switch (model.model) {
    case Model::UniformR:
      if (!(model.lambda > 0)) throw InvalidInput("uniform-R reference needs lambda > 0");
      return pi * std::sqrt(2.0 * model.lambda) / 16.0;
    case Model::MultisetR:
      if (!(model.lambda > 0)) throw InvalidInput("multiset-R reference needs lambda > 0");
      return pi * std::sqrt(2.0 * model.lambda * (model.lambda + 1.0)) / 16.0;
    case Model::Iid:
      if (!model.F) throw InvalidInput("iid reference needs a distribution F");
      return 2.0 / 3.0 * std::sqrt(model.F->variance() / pi);
    case Model::Conditioned:
      if (!model.F) throw InvalidInput("conditioned reference needs a distribution F");
      return pi * std::sqrt(2.0) / 16.0 * std::sqrt(model.F->variance());
  }
  throw InvalidInput("unknown model");
}

EstimateReport run_experiment(const ModelSpec& model, std::size_t trials, std::uint64_t seed,
                              const ExperimentOptions& options) {
  if (trials < 2) throw InvalidInput("need at least 2 trials");
  const auto start = std::chrono::steady_clock::now();
  const ModelSampler sampler(model, options.method);
  const unsigned threads = options.threads > 0 ? options.threads : default_thread_count();

  std::vector<double> beta(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Stream stream = trial_stream(seed, i);
    beta[i] = static_cast<double>(walk_beta(sampler.sample(stream)));
  });
  const auto est = stats::mean_and_se(beta);

  EstimateReport r;
  r.model = model;
  r.m = model.m;
  if (model.model != Model::Iid) r.n = model.resolved_n();
  r.trials = trials;
  r.seed = seed;
  r.mean_beta = est.mean;
  r.std_error = est.std_error;
  const double scale = std::pow(static_cast<double>(model.m), 1.5);
  r.normalized = est.mean / scale;
  r.reference = reference_constant(model);
  const double gap = r.normalized - r.reference;
  const double se = est.std_error / scale;
  if (se > 0)
    r.z_score = gap / se;
  else
    r.z_score = gap == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), gap);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<EstimateReport> sweep(const ModelSpec& model_template,
                                  const std::vector<std::size_t>& m_list, std::size_t trials,
                                  std::uint64_t seed, const ExperimentOptions& options) {
  if (m_list.empty()) throw InvalidInput("sweep needs at least one m");
  for (std::size_t i = 1; i < m_list.size(); ++i)
    if (m_list[i] <= m_list[i - 1]) throw InvalidInput("sweep m values must be increasing");

  std::vector<EstimateReport> out;
  out.reserve(m_list.size());
  for (std::size_t m : m_list) {
    ModelSpec spec = model_template;
    spec.m = m;
    spec.n.reset();
    out.push_back(run_experiment(spec, trials, seed, options));
  }
  return out;
}

}  // namespace gosperwalk
