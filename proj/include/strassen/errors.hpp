#pragma once

#include <stdexcept>
#include <string>

namespace strassen {

// Root of every error raised by the library. Callers that only care about
// "bad input" versus "broken invariant" can catch InputError or
// InvariantError respectively.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class IndexError : public InputError {
 public:
  using InputError::InputError;
};

// The reflexive-transitive closure of a presented relation is not
// antisymmetric.
class CycleError : public InputError {
 public:
  using InputError::InputError;
};

// A strict comparison n < m was required but does not hold, or a predicate
// is not a partial order on the requested prefix.
class OrderError : public InputError {
 public:
  using InputError::InputError;
};

class SupportError : public InputError {
 public:
  using InputError::InputError;
};

class NegativeMassError : public InputError {
 public:
  using InputError::InputError;
};

class NormalizationError : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// Schema-level rejection of an instance document. `path()` names the
// offending field, e.g. "mu.values[1]".
class ValidationError : public InputError {
 public:
  ValidationError(std::string path, const std::string& message)
      : InputError(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A step would drive a diagonal entry below zero. This can only happen when
// the column of the first index carries off-diagonal mass, which a run
// started from a diagonal matrix never produces.
class NegativeEntryError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace strassen
