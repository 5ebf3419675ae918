#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gosperwalk/kernels.hpp"
#include "gosperwalk/rng.hpp"
#include "gosperwalk/walk.hpp"

namespace gosperwalk {

enum class Law { Motion, Bridge };

std::string law_name(Law law);
/// Parses "motion" or "bridge"; throws InvalidInput otherwise.
Law parse_law(const std::string& name);

/// Path on the grid t_k = k/N, k = 0..N. `two_v` is the amplitude
/// parameter 2V: covariance 2V (s ^ t) for motion, 2V (s ^ t - st) for the
/// bridge.
struct DiscretePath {
  std::vector<double> values;
  double two_v = 1.0;

  std::size_t steps() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Grid analogues of the continuum functionals. tau is the first grid index
/// attaining the minimum. beta_star is the left-endpoint Riemann sum
/// (1/N) sum_{k=1}^{N-1} I_k, split into the part up to tau (d1) and the
/// part after it (d2).
struct PathStats {
  std::vector<double> Mstar;
  std::vector<double> Mtildestar;
  std::vector<double> I;
  std::size_t tau = 0;
  double beta_star = 0;
  double d1 = 0;
  double d2 = 0;
  /// Time of the last sign change (last k >= 1 with values[k] == 0 or
  /// values[k] values[k-1] < 0), as k/N; 0 if the path never returns.
  /// Meaningful for the motion law.
  double last_zero = 0;
  double span = 0;
};

/// Motion: cumulative sums of N centered Gaussian increments of variance
/// two_v/N. Bridge: the motion sample with (k/N) W(1) subtracted.
DiscretePath sample_path(Law law, std::size_t steps, double two_v, Stream& stream);

/// Scalar reference for all path functionals.
PathStats path_functionals(const DiscretePath& path);

/// beta_star and its split at tau, computed with the min-scan and excess-sum
/// kernels. Agrees with path_functionals up to summation order.
struct BetaStarParts {
  double beta_star = 0;
  double d1 = 0;
  double d2 = 0;
  std::size_t tau = 0;
};
BetaStarParts beta_star_parts(std::span<const double> values,
                              const kernels::KernelTable& k = kernels::active_kernels());

/// Scaled walk: values[k] = S_k / sqrt(m) on the grid N = m, so that
/// beta_star of the result equals beta / m^{3/2}.
DiscretePath embed_walk(const WalkStats& stats, std::size_t m);

/// Refines a path on N steps to 2N steps by Brownian midpoint insertion
/// (conditional mean plus N(0, two_v / (4N)) noise).
DiscretePath refine_midpoints(const DiscretePath& path, Stream& stream);

/// Reference value of E beta* : (2/3) sqrt(V/pi) for motion,
/// (pi/16) sqrt(2V) for the bridge, with V = two_v / 2.
double beta_star_reference(Law law, double two_v);

struct BrownianEstimate {
  Law law = Law::Bridge;
  std::size_t steps = 0;
  double two_v = 1.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double std_error = 0;
  double reference = 0;
  double d1_mean = 0;
  double d1_std_error = 0;
  double d1_reference = 0;
  double d2_mean = 0;
  double d2_std_error = 0;
  /// Standard error of the per-path difference d1 - d2.
  double split_diff_std_error = 0;
  double wall_time = 0;
};

/// Mean of beta_star over `trials` independent paths; path i uses
/// trial_stream(seed, i). Deterministic for any thread count.
BrownianEstimate estimate_beta_star(Law law, std::size_t steps, double two_v,
                                    std::size_t trials, std::uint64_t seed,
                                    unsigned threads = 0);

// ---------------------------------------------------------------------------
// Statistical diagnostics of the continuum identities.

enum class Diagnostic {
  ArcsineLastZero,
  ReflectionIdentity,
  ConditionalMean,
  ArgminSymmetry,
  Lipschitz,
};

std::string diagnostic_name(Diagnostic d);
/// Throws InvalidInput listing the valid names.
Diagnostic parse_diagnostic(const std::string& name);
std::vector<std::string> diagnostic_names();

struct DiagnosticParams {
  /// Defaults to the law each diagnostic is defined for.
  std::optional<Law> law;
  std::size_t steps = 10'000;
  double two_v = 1.0;
  double t = 0.5;
  double epsilon = 0.01;
  double alpha = 0.001;
  /// Relative tolerance for conditional_mean.
  double tolerance = 0.03;
  unsigned threads = 0;
};

struct DiagnosticReport {
  std::string name;
  Law law = Law::Motion;
  std::size_t steps = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double t = 0;
  double statistic = 0;
  double reference = 0;
  double threshold = 0;
  std::optional<double> p_value;
  std::size_t samples = 0;
  bool pass = false;
  std::string detail;
};

/// Runs one diagnostic:
///  - arcsine_last_zero: KS distance between last-zero times of motion paths
///    and (2/pi) asin(sqrt(t)); passes below the alpha-level critical value.
///  - reflection_identity: two-sample KS between w(t) - M*(t) and |w(t)|
///    under motion; the two samples come from disjoint path sets.
///  - conditional_mean: mean of w(t) - M*(t) over bridge paths with
///    tau > ceil(tN), against (1/2) sqrt(t(1-t)) sqrt(2V).
///  - argmin_symmetry: two-sample KS between tau and 1 - tau for bridge
///    paths, again from disjoint path sets.
///  - lipschitz: max |beta*(w) - beta*(w + e)| over pairs with ||e|| = eps,
///    against 2 eps.
/// Throws InvalidInput for trials < 100 or a law the diagnostic does not
/// support, InsufficientData when conditional_mean keeps fewer than 30
/// paths.
DiagnosticReport run_diagnostic(Diagnostic which, const DiagnosticParams& params,
                                std::size_t trials, std::uint64_t seed);

}  // namespace gosperwalk
