#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gosperwalk/distribution.hpp"
#include "gosperwalk/rng.hpp"
#include "gosperwalk/root_config.hpp"

namespace gosperwalk {

/// Count vector of n IID uniform picks from m cells (multinomial).
std::vector<Count> sample_multinomial(std::size_t m, Count n, Stream& stream);

/// Uniform composition of n into m nonnegative parts (stars and bars).
std::vector<Count> sample_composition(std::size_t m, Count n, Stream& stream);

/// Maxwell-Boltzmann urns: A and B each count n uniform picks from [m].
RootConfig sample_uniform_r(std::size_t m, Count n, Stream& stream);

/// Bose-Einstein urns: A and B are independent uniform compositions of n.
RootConfig sample_multiset_r(std::size_t m, Count n, Stream& stream);

/// 2m independent draws from F.
RootConfig sample_iid(const Distribution& F, std::size_t m, Stream& stream);

/// Exact sampler for m IID draws from F conditioned on their sum being n.
///
/// Holds the table p_k(s) = P(k draws sum to s), k = 0..m, s = 0..n, with
/// each row rescaled by its maximum (only ratios within a row are used).
/// Coordinates are drawn in order with P(X_j = x) proportional to
/// F(x) p_{m-j}(remaining - x). The table is read-only after construction
/// and may be shared between threads.
class ConditionedTable {
 public:
  /// Largest table (entries) the constructor accepts.
  static constexpr std::size_t kMaxEntries = 20'000'000;

  /// Throws InvalidInput if n is unattainable or the table is too large.
  ConditionedTable(const Distribution& F, std::size_t m, Count n);

  std::vector<Count> sample_vector(Stream& stream) const;

  std::size_t m() const noexcept { return m_; }
  Count n() const noexcept { return n_; }

 private:
  double row(std::size_t k, Count s) const {
    return table_[k * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(s)];
  }

  std::size_t m_;
  Count n_;
  std::vector<double> weights_;  // F(x), x = 0..min(n, max support)
  std::vector<double> table_;
};

enum class ConditionedMethod {
  Auto,     // closed-form specialization for poisson/geometric, else the table
  General,  // always the table
};

/// IID draws from F conditioned on sum(A) = sum(B) = n.
RootConfig sample_conditioned(const Distribution& F, std::size_t m, Count n, Stream& stream,
                              ConditionedMethod method = ConditionedMethod::Auto);

enum class Model { UniformR, MultisetR, Iid, Conditioned };

/// Input model. Urn and conditioned models use n, which defaults to
/// round(lambda * m). For urn models lambda is the nominal n/m ratio; iid
/// and conditioned models take F.
struct ModelSpec {
  Model model = Model::UniformR;
  std::optional<Distribution> F;
  std::size_t m = 0;
  std::optional<Count> n;
  double lambda = 1.0;

  Count resolved_n() const;
  /// Throws InvalidInput when required parameters are missing.
  void validate() const;
  /// Short label used in reports, e.g. "uniform-r" or "cond-poisson".
  std::string label() const;
};

/// Draws RootConfigs for one ModelSpec. The conditioned table for custom F
/// is built once on construction; sample() is const and thread-safe.
class ModelSampler {
 public:
  explicit ModelSampler(ModelSpec spec,
                        ConditionedMethod method = ConditionedMethod::Auto);
  RootConfig sample(Stream& stream) const;
  const ModelSpec& spec() const noexcept { return spec_; }

 private:
  ModelSpec spec_;
  ConditionedMethod method_;
  std::shared_ptr<const ConditionedTable> table_;
};

}  // namespace gosperwalk
