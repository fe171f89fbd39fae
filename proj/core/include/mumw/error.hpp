#pragma once

#include <stdexcept>
#include <string>

namespace mumw {

/// Thrown when an operation's input violates a stated precondition.
/// The message names the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimension mismatch between operands (a PreconditionError).
class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

namespace detail {
[[noreturn]] inline void fail(const std::string& what) { throw PreconditionError(what); }
}  // namespace detail

}  // namespace mumw
