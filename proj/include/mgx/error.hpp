#pragma once

#include <stdexcept>
#include <string>

namespace mgx {

/// Malformed graph input: loops, multiedges, unknown vertex ids.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (not unicyclic, not in the
/// cactus class, bound not attained, ...). The message names the clause.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine refused an input above its size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Text or JSON graph input could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A runtime consistency assertion failed. Never caused by valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mgx
