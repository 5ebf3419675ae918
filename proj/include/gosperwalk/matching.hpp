#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gosperwalk/root_config.hpp"

namespace gosperwalk {

/// A red ball at position `red` paired with a blue ball at position `blue`.
struct BallPair {
  std::size_t red = 0;
  std::size_t blue = 0;
  auto operator<=>(const BallPair&) const = default;
};

/// Matching of red and blue balls. Balls within an urn are interchangeable,
/// so a matching is a multiset of position pairs plus the multisets of
/// unmatched red and blue positions (all 1-based).
struct Matching {
  std::vector<BallPair> pairs;
  std::vector<std::size_t> unmatched_red;
  std::vector<std::size_t> unmatched_blue;

  /// Sorts every multiset so that equal matchings compare equal.
  Matching& canonicalize();
  bool operator==(const Matching&) const = default;
};

/// Weight and spanning profile of a matching. d has m+1 slots with d[t] the
/// number of pairs (i, j) with i <= t < j; d[0] and d[m] are zero.
struct MatchingProfile {
  Count weight = 0;
  std::vector<Count> d;
};

/// Pairs satisfy i <= j within [1, m], ball counts are conserved against the
/// config, and every unmatched red sits strictly right of every unmatched
/// blue.
bool is_admissible(const Matching& matching, const RootConfig& config);

MatchingProfile weight_and_profile(const Matching& matching, std::size_t m);

/// Optimal matching from the LIFO stack construction: a forward pass over
/// urns 1..tau stacking reds against blues, then the dual backward pass over
/// urns m..tau+1 stacking blues against reds. Its d-profile equals the I
/// sequence of compute_walk.
Matching stack_matching(const RootConfig& config);

inline constexpr Count kDefaultBruteForceCap = 10;

/// Minimum weight over all admissible matchings by exhaustive search.
/// Throws SizeError when the total ball count exceeds `cap`.
Count brute_force_beta(const RootConfig& config, Count cap = kDefaultBruteForceCap);

/// Calls `visit` once per distinct admissible matching (as position
/// multisets). Throws SizeError when the total ball count exceeds `cap`.
void for_each_admissible(const RootConfig& config, Count cap,
                         const std::function<void(const Matching&)>& visit);

}  // namespace gosperwalk
