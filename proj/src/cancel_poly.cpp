#include "gosperwalk/cancel_poly.hpp"

#include <algorithm>

#include "gosperwalk/errors.hpp"

namespace gosperwalk {

IntRootPoly::IntRootPoly(std::vector<std::int64_t> r) : roots(std::move(r)) {
  std::sort(roots.begin(), roots.end());
}

BigInt IntRootPoly::evaluate(const BigInt& x) const {
  BigInt value = 1;
  for (std::int64_t r : roots) value *= (x - r);
  return value;
}

std::pair<IntRootPoly, IntRootPoly> build_fg(const RootConfig& config) {
  std::vector<std::int64_t> f, g;
  for (std::size_t j = 1; j <= config.m(); ++j) {
    f.insert(f.end(), static_cast<std::size_t>(config.red_at(j)), static_cast<std::int64_t>(j));
    g.insert(g.end(), static_cast<std::size_t>(config.blue_at(j)), static_cast<std::int64_t>(j));
  }
  return {IntRootPoly(std::move(f)), IntRootPoly(std::move(g))};
}

CancellationTriple cancellation_from_matching(const Matching& matching) {
  std::vector<std::int64_t> c;
  for (const auto& p : matching.pairs) {
    if (p.red > p.blue) throw InvalidInput("matching pair has red position after blue position");
    for (std::size_t s = p.red + 1; s <= p.blue; ++s) c.push_back(static_cast<std::int64_t>(s));
  }
  std::vector<std::int64_t> a(matching.unmatched_red.begin(), matching.unmatched_red.end());
  std::vector<std::int64_t> b(matching.unmatched_blue.begin(), matching.unmatched_blue.end());
  if (!a.empty() && !b.empty() &&
      *std::min_element(a.begin(), a.end()) <= *std::max_element(b.begin(), b.end())) {
    throw InvalidInput("unmatched red ball does not sit right of every unmatched blue ball");
  }
  return {IntRootPoly(std::move(a)), IntRootPoly(std::move(b)), IntRootPoly(std::move(c))};
}

CancellationTriple cancellation_from_matching(const Matching& matching,
                                              const RootConfig& config) {
  if (!is_admissible(matching, config)) throw InvalidInput("matching is not admissible");
  return cancellation_from_matching(matching);
}

namespace {

bool coprime_shifts(const IntRootPoly& a, const IntRootPoly& b) {
  if (a.roots.empty() || b.roots.empty()) return true;
  return a.roots.front() > b.roots.back();
}

}  // namespace

bool verify_triple(const RootConfig& config, const CancellationTriple& triple,
                   std::optional<std::int64_t> first_point) {
  if (!coprime_shifts(triple.a, triple.b)) return false;

  const auto [f, g] = build_fg(config);
  const std::size_t lhs_degree = f.degree() + triple.b.degree() + triple.c.degree();
  const std::size_t rhs_degree = g.degree() + triple.a.degree() + triple.c.degree();
  if (lhs_degree != rhs_degree) return false;

  const std::int64_t start = first_point.value_or(static_cast<std::int64_t>(config.m()) + 1);
  for (std::size_t k = 0; k <= lhs_degree; ++k) {
    const BigInt x = BigInt(start) + k;
    const BigInt lhs = f.evaluate(x) * triple.b.evaluate(x) * triple.c.evaluate(x);
    const BigInt rhs = g.evaluate(x) * triple.a.evaluate(x) * triple.c.evaluate(x + 1);
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<BigInt> expand_poly(const IntRootPoly& p) {
  std::vector<BigInt> coeffs{1};
  for (std::int64_t r : p.roots) {
    // multiply by (x - r)
    coeffs.push_back(0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] = coeffs[k - 1] - r * coeffs[k];
    coeffs[0] = -r * coeffs[0];
  }
  return coeffs;
}

}  // namespace gosperwalk
