#pragma once

#include <stdexcept>
#include <string>

namespace ncfact {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedGroup : public Error {
 public:
  using Error::Error;
};

class RankTooSmall : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation would enumerate more of W than the configured
/// budget allows.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A division that must be exact was not. Always signals corrupted input data
/// or a broken invariant; results are never rounded.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class NotLengthTwo : public Error {
 public:
  using Error::Error;
};

class NotInNC : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NoTableRow : public Error {
 public:
  using Error::Error;
};

}  // namespace ncfact
