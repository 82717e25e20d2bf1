#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frattini {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: mismatched degrees, non-prime parameters, malformed cycles.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Group-spec text could not be parsed. `position` is a 0-based offset.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured resource bound (enumeration, lattice, index, timeout) was hit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// A check was requested on inputs that violate its hypothesis, e.g. a
// quotient check with N not contained in the Frattini subgroup.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// A user-supplied witness does not describe subgroups of the parent group.
class WitnessInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace frattini
