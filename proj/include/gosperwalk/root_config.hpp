#pragma once

#include <cstdint>
#include <vector>

namespace gosperwalk {

using Count = std::int64_t;

/// Exponent vectors of f(k) = prod_j (k-j)^{A_j} and g(k) = prod_j (k-j)^{B_j}
/// for roots in [m] = {1..m}. In the urn picture, urn j holds A_j red balls
/// and B_j blue balls.
///
/// Vectors are stored 0-based: red[j-1] is A_j.
struct RootConfig {
  std::vector<Count> red;
  std::vector<Count> blue;

  RootConfig() = default;
  RootConfig(std::vector<Count> a, std::vector<Count> b)
      : red(std::move(a)), blue(std::move(b)) {}

  std::size_t m() const noexcept { return red.size(); }
  Count red_at(std::size_t position) const { return red[position - 1]; }
  Count blue_at(std::size_t position) const { return blue[position - 1]; }

  Count total_red() const noexcept;
  Count total_blue() const noexcept;

  /// Time-reversed, colour-swapped configuration:
  /// A'_j = B_{m+1-j}, B'_j = A_{m+1-j}.
  RootConfig reversed_dual() const;

  /// Throws InvalidInput unless m >= 1, |A| == |B| and all entries >= 0.
  void validate() const;

  bool operator==(const RootConfig&) const = default;
};

}  // namespace gosperwalk
