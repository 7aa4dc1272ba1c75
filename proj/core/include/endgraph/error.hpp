#pragma once

#include <stdexcept>
#include <string>

namespace endgraph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A presentation generator emitted something a truncation cannot hold
/// (edge beyond the span bound, self-loop, unknown vertex, ...).
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Malformed document (not JSON, wrong field types).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document describing an invalid digraph.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownEndError : public Error {
 public:
  explicit UnknownEndError(const std::string& name)
      : Error("unknown end '" + name + "'") {}
};

/// Caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input too small for the requested certificate (e.g. star_comb with fewer
/// than t reachable targets).
class InsufficientInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace endgraph
