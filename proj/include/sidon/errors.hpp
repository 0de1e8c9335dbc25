#pragma once

#include <stdexcept>

namespace sidon {

/// Raised when an operation's documented precondition is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sidon
