#pragma once

#include <stdexcept>
#include <string>

namespace delorder {

/// Malformed user input: bad word syntax, unknown preset, invalid matrix.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap was exceeded (enumeration size, word length, frontier
/// size). The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural guarantee did not hold; indicates a defect rather than bad
/// input. The CLI maps this to exit code 4.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace delorder
