#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction would produce a group larger than the configured order bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Construction data is inconsistent (e.g. a cocycle condition fails).
class InvalidConstruction : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A multiplication table violates one of the group axioms.
class NotAGroup : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// The Hurwitz formula yields a non-integral genus for the given type.
class NonIntegralGenus : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live over the same group do not.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// No groups of the requested order are available to sweep over.
class MissingCatalog : public Error {
 public:
  using Error::Error;
};

}  // namespace ramify
