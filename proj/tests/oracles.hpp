#pragma once

// Independent reference computations for the tests. Everything here works
// straight from the definitions (quadratic scans, symbolic expansion) and
// shares no code with the library beyond the RootConfig container.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gosperwalk/root_config.hpp"

namespace oracle {

using gosperwalk::Count;
using gosperwalk::RootConfig;
using Big = boost::multiprecision::cpp_int;

struct Walk {
  std::vector<Count> S;
  std::size_t tau = 0;
  std::vector<Count> I;  // m+1 slots
  Count beta = 0;
};

// O(m^2) evaluation of the excess sequence.
inline Walk naive_walk(const RootConfig& c) {
  const std::size_t m = c.red.size();
  Walk w;
  w.S.assign(m + 1, 0);
  for (std::size_t j = 1; j <= m; ++j) w.S[j] = w.S[j - 1] + c.red[j - 1] - c.blue[j - 1];
  Count lowest = std::numeric_limits<Count>::max();
  for (std::size_t k = 0; k <= m; ++k)
    if (w.S[k] < lowest) {
      lowest = w.S[k];
      w.tau = k;
    }
  w.I.assign(m + 1, 0);
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    Count mn = std::numeric_limits<Count>::max();
    if (j <= w.tau)
      for (std::size_t k = 0; k <= j; ++k) mn = std::min(mn, w.S[k]);
    else
      for (std::size_t k = j; k <= m; ++k) mn = std::min(mn, w.S[k]);
    w.I[j] = w.S[j] - mn;
    w.beta += w.I[j];
  }
  return w;
}

// Coefficients (ascending) of prod (x - r) for the given roots, shifted by
// `shift` (i.e. the polynomial p(x + shift)).
inline std::vector<Big> expand(const std::vector<std::int64_t>& roots, std::int64_t shift = 0) {
  std::vector<Big> coeff{1};
  for (auto r : roots) {
    std::vector<Big> next(coeff.size() + 1, 0);
    const Big c0 = Big(shift) - r;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] += coeff[i];
      next[i] += coeff[i] * c0;
    }
    coeff = std::move(next);
  }
  return coeff;
}

inline std::vector<Big> multiply(const std::vector<Big>& p, const std::vector<Big>& q) {
  std::vector<Big> out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

inline std::vector<std::int64_t> roots_of(const std::vector<Count>& mult) {
  std::vector<std::int64_t> r;
  for (std::size_t j = 0; j < mult.size(); ++j)
    for (Count k = 0; k < mult[j]; ++k) r.push_back(static_cast<std::int64_t>(j + 1));
  return r;
}

// Symbolic check of f(x) b(x) c(x) == g(x) a(x) c(x+1) by full expansion.
inline bool symbolic_identity(const RootConfig& config, const std::vector<std::int64_t>& a,
                              const std::vector<std::int64_t>& b,
                              const std::vector<std::int64_t>& c) {
  const auto lhs = multiply(multiply(expand(roots_of(config.red)), expand(b)), expand(c));
  const auto rhs = multiply(multiply(expand(roots_of(config.blue)), expand(a)), expand(c, 1));
  return lhs == rhs;
}

// Minimum admissible-matching weight by enumerating matchings of labelled
// balls (no symmetry reduction). Exponential; keep totals small.
inline Count labelled_min_weight(const RootConfig& config) {
  const auto reds = roots_of(config.red);
  const auto blues = roots_of(config.blue);
  std::vector<bool> used(blues.size(), false);
  std::vector<std::int64_t> unmatched_red;
  Count best = -1;
  auto rec = [&](auto&& self, std::size_t r, Count weight) -> void {
    if (r == reds.size()) {
      std::int64_t max_blue = std::numeric_limits<std::int64_t>::min();
      for (std::size_t k = 0; k < blues.size(); ++k)
        if (!used[k]) max_blue = std::max(max_blue, blues[k]);
      for (auto x : unmatched_red)
        if (x <= max_blue) return;
      if (best < 0 || weight < best) best = weight;
      return;
    }
    unmatched_red.push_back(reds[r]);
    self(self, r + 1, weight);
    unmatched_red.pop_back();
    for (std::size_t k = 0; k < blues.size(); ++k) {
      if (used[k] || blues[k] < reds[r]) continue;
      used[k] = true;
      self(self, r + 1, weight + (blues[k] - reds[r]));
      used[k] = false;
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Random config with m in [1, max_m] and entries in [0, max_entry].
template <class Rng>
RootConfig random_config(Rng& rng, std::size_t max_m, Count max_entry) {
  std::uniform_int_distribution<std::size_t> md(1, max_m);
  std::uniform_int_distribution<Count> ed(0, max_entry);
  const std::size_t m = md(rng);
  RootConfig c;
  c.red.resize(m);
  c.blue.resize(m);
  for (auto& x : c.red) x = ed(rng);
  for (auto& x : c.blue) x = ed(rng);
  return c;
}

// Calls visit(vec) for every nonnegative vector of length m with sum <= total.
template <class Visit>
void for_each_vector(std::size_t m, Count total, Visit&& visit) {
  std::vector<Count> v(m, 0);
  auto rec = [&](auto&& self, std::size_t pos, Count left) -> void {
    if (pos == m) {
      visit(v);
      return;
    }
    for (Count x = 0; x <= left; ++x) {
      v[pos] = x;
      self(self, pos + 1, left - x);
    }
    v[pos] = 0;
  };
  rec(rec, 0, total);
}

// Calls visit(config) for every config with m <= max_m and per-colour totals
// <= max_total.
template <class Visit>
void for_each_config(std::size_t max_m, Count max_total, Visit&& visit) {
  for (std::size_t m = 1; m <= max_m; ++m)
    for_each_vector(m, max_total, [&](const std::vector<Count>& red) {
      for_each_vector(m, max_total, [&](const std::vector<Count>& blue) {
        RootConfig c;
        c.red = red;
        c.blue = blue;
        visit(c);
      });
    });
}

}  // namespace oracle
