#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: different rings, ranks, parents or variable counts.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Groebner computation exceeded its reduction-step cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied object violates an operation's precondition
/// (ill-defined module map, non-complex passed to homology).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Operation not available for this input (degree cap, characteristic).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An internally constructed object failed its own consistency check.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A verification step disagreed with the expected algebraic fact.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& step, const std::string& detail)
      : Error("verification failed at step '" + step + "': " + detail), step_(step) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

}  // namespace koszul
