#pragma once

#include <stdexcept>
#include <string>

namespace qkneser {

/// Thrown when a computation would exceed a configured resource guard
/// (vertex limits, search-node budgets, field table limits).  Callers that
/// map errors to exit codes treat this differently from invalid input.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qkneser
