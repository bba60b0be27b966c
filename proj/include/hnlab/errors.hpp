#pragma once

#include <stdexcept>
#include <string>

namespace hnlab {

/// Malformed textual input: polynomial strings, rationals, algebra files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter assignment that violates an algebra's domain constraints.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bracket table that fails the Jacobi identity.
class JacobiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural failure of an exact construction (e.g. a direct sum that does
/// not close up). Always indicates a bug or a mis-encoded condition.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hnlab
