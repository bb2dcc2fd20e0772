#pragma once

#include <stdexcept>
#include <string>

namespace rubikred {

// Argument outside an operation's domain (bad index, mismatched puzzle, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A document or token that does not match its format.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search hit its configured bound before it could answer.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cubical instance whose Hamiltonian paths do not all run l_1 -> l_n.
class PromiseViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rubikred
