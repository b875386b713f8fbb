#pragma once

#include <stdexcept>
#include <string>

namespace bca {

/// Thrown when an operation's precondition on its inputs is violated
/// (cross-algebra operands, malformed tables, out-of-range atoms, ...).
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when two computations that must agree do not. Indicates a bug,
/// never bad input.
class InternalInconsistency : public std::logic_error {
  public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace bca
