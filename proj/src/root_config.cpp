#include "gosperwalk/root_config.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gosperwalk/errors.hpp"

namespace gosperwalk {

Count RootConfig::total_red() const noexcept {
  return std::accumulate(red.begin(), red.end(), Count{0});
}

Count RootConfig::total_blue() const noexcept {
  return std::accumulate(blue.begin(), blue.end(), Count{0});
}

RootConfig RootConfig::reversed_dual() const {
  RootConfig out;
  out.red.assign(blue.rbegin(), blue.rend());
  out.blue.assign(red.rbegin(), red.rend());
  return out;
}

void RootConfig::validate() const {
  if (red.empty()) throw InvalidInput("root config needs m >= 1 urns");
  if (red.size() != blue.size()) {
    throw InvalidInput("B has length " + std::to_string(blue.size()) +
                       ", expected " + std::to_string(red.size()));
  }
  auto negative = [](Count c) { return c < 0; };
  if (std::any_of(red.begin(), red.end(), negative))
    throw InvalidInput("A has a negative entry");
  if (std::any_of(blue.begin(), blue.end(), negative))
    throw InvalidInput("B has a negative entry");
}

}  // namespace gosperwalk
