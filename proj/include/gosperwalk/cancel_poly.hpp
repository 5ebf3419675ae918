#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gosperwalk/matching.hpp"
#include "gosperwalk/root_config.hpp"

namespace gosperwalk {

using BigInt = boost::multiprecision::cpp_int;

/// Monic polynomial prod (x - r) over an integer root multiset. The empty
/// multiset is the constant 1. Roots are kept sorted.
struct IntRootPoly {
  std::vector<std::int64_t> roots;

  IntRootPoly() = default;
  explicit IntRootPoly(std::vector<std::int64_t> r);

  std::size_t degree() const noexcept { return roots.size(); }
  BigInt evaluate(const BigInt& x) const;
  bool operator==(const IntRootPoly&) const = default;
};

/// The triple (a, b, c) with f/g = (a/b) * c(x+1)/c(x).
struct CancellationTriple {
  IntRootPoly a;
  IntRootPoly b;
  IntRootPoly c;
};

/// f has root j with multiplicity A_j, g has root j with multiplicity B_j.
std::pair<IntRootPoly, IntRootPoly> build_fg(const RootConfig& config);

/// Each pair (i, j) contributes (x-i-1)(x-i-2)...(x-j) to c, so that the
/// factor telescopes to (x-i)/(x-j); unmatched reds go to a and unmatched
/// blues to b. Throws InvalidInput if a pair has i > j or an unmatched red
/// is not strictly right of every unmatched blue.
CancellationTriple cancellation_from_matching(const Matching& matching);

/// As above, additionally checking ball conservation against `config`.
CancellationTriple cancellation_from_matching(const Matching& matching,
                                              const RootConfig& config);

/// Exact check of f(x) b(x) c(x) == g(x) a(x) c(x+1) together with the
/// integer-root coprimality condition (every root of a exceeds every root of
/// b). Both sides are evaluated at D+1 consecutive integers starting at
/// `first_point` (default m+1), D being the larger side's degree.
bool verify_triple(const RootConfig& config, const CancellationTriple& triple,
                   std::optional<std::int64_t> first_point = std::nullopt);

/// Ascending coefficients of prod (x - r); leading coefficient 1.
std::vector<BigInt> expand_poly(const IntRootPoly& p);

}  // namespace gosperwalk
