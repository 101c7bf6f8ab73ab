#pragma once

#include <stdexcept>
#include <string>

namespace fermenc {

/// Operands live on different numbers of qubits or modes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense conversion would exceed the configured qubit cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructor was asked for something its preconditions forbid
/// (tree encoding on a cyclic graph, j == k edge, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A derived object (reference state, schedule) could not be built.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fermenc
