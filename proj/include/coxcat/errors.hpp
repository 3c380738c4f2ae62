#pragma once

#include <stdexcept>
#include <string>

namespace coxcat {

// Bad input from a caller: out-of-range rank, malformed antichain, unknown type.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured resource bound (group too large, etc).
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural guarantee failed to hold; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw argument_error(msg);
}

inline void ensure(bool ok, const std::string& msg) {
  if (!ok) throw internal_error(msg);
}

}  // namespace coxcat
