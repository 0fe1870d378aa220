#pragma once

#include <stdexcept>
#include <string>

namespace linecong {

/// Caller violated a precondition (wrong ring, bad index, malformed input).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap (degree, pair count, coefficient size) was exceeded.
/// Never a wrong answer: the computation is abandoned, not truncated.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A seeded random choice turned out degenerate (dimension check failed)
/// and the retry cap was exhausted.
class GenericityError : public std::runtime_error {
 public:
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// No rational sample point was found within the retry cap.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linecong
