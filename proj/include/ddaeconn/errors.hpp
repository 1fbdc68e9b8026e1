#pragma once

#include <stdexcept>
#include <string>

namespace ddaeconn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by bad user input (documents, graphs, arguments).
class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedDocument : public InputError {
 public:
  using InputError::InputError;
};

class SchemaViolation : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateOccurrence : public InputError {
 public:
  using InputError::InputError;
};

/// Malformed digraph: dangling endpoint, self-loop, parallel arc.
class InvalidGraph : public InputError {
 public:
  using InputError::InputError;
};

class RootNotInGraph : public InputError {
 public:
  using InputError::InputError;
};

class ArcNotInGraph : public InputError {
 public:
  using InputError::InputError;
};

class NotExposed : public InputError {
 public:
  using InputError::InputError;
};

class InconsistentReport : public InputError {
 public:
  using InputError::InputError;
};

class BadSize : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size cap for an exponential oracle was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A configured work limit was exceeded before the computation finished.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ddaeconn
