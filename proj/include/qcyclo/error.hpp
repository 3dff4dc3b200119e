#pragma once

#include <stdexcept>
#include <string>

namespace qcyclo {

/// Invalid input: a value outside an operation's domain (bad (p, q), j out of
/// range, unsupported family, ...). The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computations of the same quantity disagreed. Signals a
/// convention bug; the CLI maps this to exit code 3.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qcyclo
