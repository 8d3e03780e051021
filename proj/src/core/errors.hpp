#pragma once

#include <stdexcept>
#include <string>

namespace udhn {

// Bad arguments, ids, or configuration supplied by the caller.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (CSV layout, JSON config syntax).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Value outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An invariant that downstream code relies on was violated, e.g. an
// infeasible switch decision reached power accounting. Always a bug.
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace udhn
