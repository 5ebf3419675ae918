#include "gosperwalk/matching.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "gosperwalk/errors.hpp"
#include "gosperwalk/walk.hpp"

namespace gosperwalk {

Matching& Matching::canonicalize() {
  std::sort(pairs.begin(), pairs.end());
  std::sort(unmatched_red.begin(), unmatched_red.end());
  std::sort(unmatched_blue.begin(), unmatched_blue.end());
  return *this;
}

bool is_admissible(const Matching& matching, const RootConfig& config) {
  const std::size_t m = config.m();
  if (m == 0 || config.blue.size() != m) return false;

  std::vector<Count> red(m + 1, 0), blue(m + 1, 0);
  for (const auto& p : matching.pairs) {
    if (p.red < 1 || p.blue > m || p.red > p.blue) return false;
    ++red[p.red];
    ++blue[p.blue];
  }
  for (std::size_t i : matching.unmatched_red) {
    if (i < 1 || i > m) return false;
    ++red[i];
  }
  for (std::size_t j : matching.unmatched_blue) {
    if (j < 1 || j > m) return false;
    ++blue[j];
  }
  for (std::size_t j = 1; j <= m; ++j) {
    if (red[j] != config.red_at(j) || blue[j] != config.blue_at(j)) return false;
  }

  if (!matching.unmatched_red.empty() && !matching.unmatched_blue.empty()) {
    const auto lowest_red =
        *std::min_element(matching.unmatched_red.begin(), matching.unmatched_red.end());
    const auto highest_blue =
        *std::max_element(matching.unmatched_blue.begin(), matching.unmatched_blue.end());
    if (lowest_red <= highest_blue) return false;
  }
  return true;
}

MatchingProfile weight_and_profile(const Matching& matching, std::size_t m) {
  MatchingProfile out;
  out.d.assign(m + 1, 0);
  std::vector<Count> delta(m + 2, 0);
  for (const auto& p : matching.pairs) {
    out.weight += static_cast<Count>(p.blue - p.red);
    if (p.blue > p.red) {
      ++delta[p.red];
      --delta[p.blue];
    }
  }
  Count running = 0;
  for (std::size_t t = 1; t < m; ++t) {
    running += delta[t];
    out.d[t] = running;
  }
  return out;
}

namespace {

// Run-length stack entry: `count` balls waiting at `position`.
struct Run {
  std::size_t position;
  Count count;
};

// Stacks `pushed` balls of urn j, then matches `incoming` balls of the other
// colour against the top of the stack. Leftover incoming balls are reported
// through `discard`.
template <class Emit, class Discard>
void stack_step(std::vector<Run>& stack, std::size_t j, Count pushed, Count incoming, Emit emit,
                Discard discard) {
  if (pushed > 0) stack.push_back({j, pushed});
  while (incoming > 0 && !stack.empty()) {
    Run& top = stack.back();
    const Count take = std::min(top.count, incoming);
    emit(top.position, take);
    top.count -= take;
    incoming -= take;
    if (top.count == 0) stack.pop_back();
  }
  if (incoming > 0) discard(incoming);
}

}  // namespace

Matching stack_matching(const RootConfig& config) {
  const WalkStats walk = compute_walk(config);
  const std::size_t m = config.m();
  Matching out;

  std::vector<Run> stack;
  for (std::size_t j = 1; j <= walk.tau; ++j) {
    stack_step(
        stack, j, config.red_at(j), config.blue_at(j),
        [&](std::size_t red_pos, Count n) {
          for (Count c = 0; c < n; ++c) out.pairs.push_back({red_pos, j});
        },
        [&](Count n) { out.unmatched_blue.insert(out.unmatched_blue.end(), n, j); });
  }
  // Y_tau = 0: every red stacked up to tau has been matched.

  stack.clear();
  for (std::size_t j = m; j > walk.tau; --j) {
    stack_step(
        stack, j, config.blue_at(j), config.red_at(j),
        [&](std::size_t blue_pos, Count n) {
          for (Count c = 0; c < n; ++c) out.pairs.push_back({j, blue_pos});
        },
        [&](Count n) { out.unmatched_red.insert(out.unmatched_red.end(), n, j); });
  }

  return out.canonicalize();
}

namespace {

class Enumerator {
 public:
  Enumerator(const RootConfig& config, Count cap) : config_(config) {
    config.validate();
    const Count balls = config.total_red() + config.total_blue();
    if (balls > cap) {
      throw SizeError("brute-force enumeration needs at most " + std::to_string(cap) +
                      " balls, got " + std::to_string(balls));
    }
    for (std::size_t i = 1; i <= config.m(); ++i)
      reds_.insert(reds_.end(), static_cast<std::size_t>(config.red_at(i)), i);
    blue_left_ = config.blue;
    choice_.assign(reds_.size(), 0);
  }

  // Visits each distinct admissible matching whose weight stays within
  // `*bound` (when set); the visitor may lower the bound.
  template <class Visit>
  void run(std::optional<Count>* bound, Visit visit) {
    bound_ = bound;
    recurse(0, 0, visit);
  }

 private:
  // choice_[r] == 0 leaves red r unmatched, otherwise it is the blue position.
  // Reds from the same urn take nondecreasing choices so that permutations of
  // interchangeable balls are visited once.
  template <class Visit>
  void recurse(std::size_t r, Count weight, Visit& visit) {
    if (bound_->has_value() && weight > **bound_) return;
    if (r == reds_.size()) {
      leaf(weight, visit);
      return;
    }
    const std::size_t pos = reds_[r];
    const bool same_urn = r > 0 && reds_[r - 1] == pos;
    const std::size_t floor = same_urn ? choice_[r - 1] : 0;

    if (floor == 0) {
      choice_[r] = 0;
      recurse(r + 1, weight, visit);
    }
    for (std::size_t j = std::max(pos, floor); j <= config_.m(); ++j) {
      if (blue_left_[j - 1] == 0) continue;
      --blue_left_[j - 1];
      choice_[r] = j;
      recurse(r + 1, weight + static_cast<Count>(j - pos), visit);
      ++blue_left_[j - 1];
    }
  }

  template <class Visit>
  void leaf(Count weight, Visit& visit) {
    std::size_t lowest_red = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < reds_.size(); ++r)
      if (choice_[r] == 0) lowest_red = std::min(lowest_red, reds_[r]);
    std::size_t highest_blue = 0;
    for (std::size_t j = 1; j <= config_.m(); ++j)
      if (blue_left_[j - 1] > 0) highest_blue = j;
    if (lowest_red <= highest_blue) return;
    visit(weight);
  }

 public:
  Matching current() const {
    Matching out;
    for (std::size_t r = 0; r < reds_.size(); ++r) {
      if (choice_[r] == 0)
        out.unmatched_red.push_back(reds_[r]);
      else
        out.pairs.push_back({reds_[r], choice_[r]});
    }
    for (std::size_t j = 1; j <= config_.m(); ++j)
      out.unmatched_blue.insert(out.unmatched_blue.end(),
                                static_cast<std::size_t>(blue_left_[j - 1]), j);
    return out.canonicalize();
  }

 private:
  const RootConfig& config_;
  std::vector<std::size_t> reds_;
  std::vector<Count> blue_left_;
  std::vector<std::size_t> choice_;
  std::optional<Count>* bound_ = nullptr;
};

}  // namespace

Count brute_force_beta(const RootConfig& config, Count cap) {
  Enumerator e(config, cap);
  std::optional<Count> best;
  e.run(&best, [&](Count weight) {
    if (!best || weight < *best) best = weight;
  });
  // stack_matching is always admissible, so best is set.
  return best.value_or(0);
}

void for_each_admissible(const RootConfig& config, Count cap,
                         const std::function<void(const Matching&)>& visit) {
  Enumerator e(config, cap);
  std::optional<Count> unbounded;
  e.run(&unbounded, [&](Count) { visit(e.current()); });
}

}  // namespace gosperwalk
