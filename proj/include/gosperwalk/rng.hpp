#pragma once

#include <cstdint>
#include <random>

namespace gosperwalk {

/// Random stream handed to samplers. One engine per trial.
using Stream = std::mt19937_64;

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of trial `index` under master seed `seed`:
///   mix64(seed + (index + 1) * 0x9E3779B97F4A7C15)
/// Trial results depend only on (seed, index), never on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

inline Stream trial_stream(std::uint64_t seed, std::uint64_t index) {
  return Stream(derive_seed(seed, index));
}

}  // namespace gosperwalk
