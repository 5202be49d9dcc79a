#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace otcert {

/// No coupling with finite total cost exists (the infinity pattern of the
/// cost disconnects supply from demand).
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force oracle was asked to exceed its hard size cap.
struct SizeExceededError : std::runtime_error {
  explicit SizeExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A support pair carries infinite cost; certification is undefined there.
struct InfiniteOnSupportError : std::runtime_error {
  explicit InfiniteOnSupportError(const std::string& what) : std::runtime_error(what) {}
};

/// Every column (or row) candidate of a c-transform is excluded; potentials
/// take values in R u {-inf} only, so the instance is rejected instead of
/// clamping to +inf.
struct DegenerateInstanceError : std::runtime_error {
  explicit DegenerateInstanceError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace otcert
