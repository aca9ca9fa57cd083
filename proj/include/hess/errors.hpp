#pragma once

#include <stdexcept>
#include <string>

namespace hess {

// bad user-supplied data: malformed serializations, size mismatches,
// singular matrices where invertible ones are required.  CLI exit code 2.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// a census/verification was requested at a prime where the point-count
// identity is not guaranteed.  CLI exit code 3.
struct inadmissible_prime : std::runtime_error {
  explicit inadmissible_prime(const std::string& what)
      : std::runtime_error(what) {}
};

// an exact identity that must hold failed to hold.  CLI exit code 1.
struct verification_failure : std::runtime_error {
  explicit verification_failure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hess
