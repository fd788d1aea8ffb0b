#pragma once

#include <stdexcept>
#include <string>

namespace vj {

// Malformed textual input (alphabet, word, product, automaton files).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A teacher or oracle answered in a way no fixed language could explain.
class TeacherInconsistency : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (e.g. non-minimal hypothesis).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A state the algorithms prove unreachable was reached anyway.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace vj
