#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad graph, unknown vertex, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A resource guard tripped: the requested enumeration exceeds a configured cap.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::string guard, const std::string& detail)
      : Error(guard + ": " + detail), guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

}  // namespace chipfire
