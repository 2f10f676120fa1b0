#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Query bounds outside the owning array, or an inverted range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Matrix dimensions that do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed or out-of-contract input. Carries a 1-based line number when the
// input came from a file.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A solver or reduction was asked to handle a pair function it has no
// machinery for (no extender, no decomposition).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Decomposition maps whose images would collide with the never-equal markers.
class EncodingError : public Error {
 public:
  using Error::Error;
};

}  // namespace triq
