#pragma once

#include <stdexcept>
#include <string>

namespace combi {

// Caller handed in something outside an operation's domain (malformed
// partition, size mismatch, bad tableau pair, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is valid but larger than the configured enumeration bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked 64-bit computation would have wrapped.
class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An internal consistency check failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace combi
