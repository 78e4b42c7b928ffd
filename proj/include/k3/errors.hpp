#pragma once

#include <stdexcept>
#include <string>

namespace k3 {

// Bad input to a library operation. The CLI maps these to exit code 3.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact arithmetic left the int64 range. Still an input-size problem.
struct OverflowError : DomainError {
  using DomainError::DomainError;
};

// A mathematical identity the library relies on failed. Must never happen
// in a correct build; the CLI maps these to exit code 4.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace k3
