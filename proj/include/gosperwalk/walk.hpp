#pragma once

#include <cstddef>
#include <vector>

#include "gosperwalk/root_config.hpp"

namespace gosperwalk {

/// Random-walk representation of the cancellation degree.
///
/// With X_j = A_j - B_j, S_k = X_1 + ... + X_k (S_0 = 0), the prefix minima
/// M, suffix minima Mtilde, the first argmin tau, and the excess processes
/// Y = S - M and Ytilde = S - Mtilde, the spliced process
/// I_j = Y_j for j <= tau, Ytilde_j for j > tau sums to beta over 1..m-1.
///
/// Sequences S, M, Mtilde, Y, Ytilde are indexed 0..m. I is stored with
/// m+1 slots as well so that I[j] is I_j; I[0] and I[m] are always zero and
/// do not enter beta.
struct WalkStats {
  std::vector<Count> S;
  std::vector<Count> M;
  std::vector<Count> Mtilde;
  std::size_t tau = 0;
  std::vector<Count> Y;
  std::vector<Count> Ytilde;
  std::vector<Count> I;
  Count beta = 0;
};

/// Full walk statistics in O(m). Throws InvalidInput for an invalid config
/// and std::overflow_error if beta does not fit in 64 bits.
WalkStats compute_walk(const RootConfig& config);

/// beta alone, through the SIMD kernel layer. Agrees exactly with
/// compute_walk(config).beta.
Count walk_beta(const RootConfig& config);

/// Partial sums S_0..S_m of the increments A_j - B_j.
std::vector<Count> partial_sums(const RootConfig& config);

}  // namespace gosperwalk
