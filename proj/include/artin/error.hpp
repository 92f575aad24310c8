#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: JSON, words, polynomials.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on the mathematical input does not hold (wrong graph type,
// vertex not in the graph, non-spherical subset, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of budget before it could decide.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Something that the theory says cannot happen did happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
