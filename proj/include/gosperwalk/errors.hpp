#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gosperwalk {

// Malformed or out-of-contract arguments.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by exhaustive routines when the instance exceeds their cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A conditioned statistic had too few surviving samples to be meaningful.
class InsufficientData : public std::runtime_error {
 public:
  InsufficientData(const std::string& what, std::size_t survivors)
      : std::runtime_error(what), survivors_(survivors) {}
  std::size_t survivors() const noexcept { return survivors_; }

 private:
  std::size_t survivors_;
};

}  // namespace gosperwalk
