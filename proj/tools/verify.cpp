#include <functional>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cli.hpp"
#include "gosperwalk/cancel_poly.hpp"
#include "gosperwalk/matching.hpp"
#include "gosperwalk/rng.hpp"
#include "gosperwalk/walk.hpp"

namespace gosperwalk::cli {

namespace {

// Every vector of `m` nonnegative entries with sum <= total.
void for_each_vector(std::size_t m, Count total, const std::function<void(const std::vector<Count>&)>& fn) {
  std::vector<Count> v(m, 0);
  std::function<void(std::size_t, Count)> rec = [&](std::size_t i, Count left) {
    if (i == m) {
      fn(v);
      return;
    }
    for (Count x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
    v[i] = 0;
  };
  rec(0, total);
}

std::string show(const std::vector<Count>& v) { return fmt::format("({})", fmt::join(v, ",")); }

}  // namespace

std::string check_config(const RootConfig& config, std::int64_t cap) {
  const WalkStats walk = compute_walk(config);
  const Matching stack = stack_matching(config);
  const MatchingProfile profile = weight_and_profile(stack, config.m());
  if (!is_admissible(stack, config)) return "stack matching is not admissible";
  if (profile.weight != walk.beta)
    return fmt::format("stack weight {} != walk beta {}", profile.weight, walk.beta);
  if (profile.d != walk.I) return "stack d-profile differs from I";
  if (walk_beta(config) != walk.beta)
    return fmt::format("kernel beta {} != walk beta {}", walk_beta(config), walk.beta);
  const CancellationTriple triple = cancellation_from_matching(stack, config);
  if (!verify_triple(config, triple)) return "stack triple fails the cancellation identity";
  if (static_cast<Count>(triple.c.degree()) != walk.beta)
    return fmt::format("deg c = {} != beta {}", triple.c.degree(), walk.beta);
  if (compute_walk(config.reversed_dual()).beta != walk.beta) return "reversal duality broken";
  if (config.total_red() + config.total_blue() <= cap) {
    const Count brute = brute_force_beta(config, cap);
    if (brute != walk.beta) return fmt::format("brute force {} != walk beta {}", brute, walk.beta);
  }
  return {};
}

VerifyOutcome run_verification(std::int64_t cap, std::size_t cases, std::uint64_t seed) {
  VerifyOutcome out;
  const Count per_colour = std::min<Count>(4, cap / 2);

  for (std::size_t m = 1; m <= 4 && !out.counterexample; ++m) {
    for_each_vector(m, per_colour, [&](const std::vector<Count>& a) {
      if (out.counterexample) return;
      for_each_vector(m, per_colour, [&](const std::vector<Count>& b) {
        if (out.counterexample) return;
        RootConfig config(a, b);
        ++out.exhaustive_configs;
        if (auto why = check_config(config, cap); !why.empty()) {
          out.counterexample = config;
          out.failure = why;
        }
      });
    });
  }

  for (std::size_t i = 0; i < cases && !out.counterexample; ++i) {
    Stream stream = trial_stream(seed, i);
    std::uniform_int_distribution<std::size_t> pick_m(1, 20);
    std::uniform_int_distribution<Count> entry(0, 3);
    const std::size_t m = pick_m(stream);
    RootConfig config{std::vector<Count>(m), std::vector<Count>(m)};
    for (auto& x : config.red) x = entry(stream);
    for (auto& x : config.blue) x = entry(stream);
    ++out.random_cases;
    if (auto why = check_config(config, cap); !why.empty()) {
      out.counterexample = config;
      out.failure = why;
    }
  }
  if (out.counterexample) {
    out.failure += fmt::format(" for A={} B={}", show(out.counterexample->red),
                               show(out.counterexample->blue));
  }
  return out;
}

}  // namespace gosperwalk::cli
