#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gosperwalk/root_config.hpp"

namespace gosperwalk::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

/// Entry point: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOutcome {
  std::size_t exhaustive_configs = 0;
  std::size_t random_cases = 0;
  std::optional<RootConfig> counterexample;
  std::string failure;
};

inline constexpr std::int64_t kMaxVerifyCap = 12;

/// Exhaustive equivalence over m <= 4 with per-colour totals up to
/// min(4, cap/2), then `cases` random configs (m <= 20, entries <= 3)
/// checking the stack triple, with brute force whenever the ball count is
/// within `cap`. Stops at the first disagreement.
VerifyOutcome run_verification(std::int64_t cap, std::size_t cases, std::uint64_t seed);

/// Failure description for one config, or empty when every route agrees.
std::string check_config(const RootConfig& config, std::int64_t cap);

}  // namespace gosperwalk::cli
