#pragma once

#include <stdexcept>
#include <string>

#include "sdym/lattice.hpp"

namespace sdym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebraic operation was applied outside its domain (e.g. inverting zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A windowed form was evaluated outside its validity region.
class WindowError : public Error {
 public:
  WindowError(const std::string& what, MultiIndex where) : Error(what), where_(where) {}
  [[nodiscard]] const MultiIndex& where() const { return where_; }

 private:
  MultiIndex where_;
};

/// Degree out of range for the requested operation.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different complexes (C(4) vs its double).
class ComplexError : public Error {
 public:
  using Error::Error;
};

/// A pointwise inverse met a zero coefficient.
class SingularCoefficientError : public Error {
 public:
  SingularCoefficientError(const std::string& what, MultiIndex where)
      : Error(what), where_(where) {}
  [[nodiscard]] const MultiIndex& where() const { return where_; }

 private:
  MultiIndex where_;
};

/// A gauge 0-form is not invertible somewhere it is needed.
class SingularGaugeError : public Error {
 public:
  SingularGaugeError(const std::string& what, MultiIndex where) : Error(what), where_(where) {}
  [[nodiscard]] const MultiIndex& where() const { return where_; }

 private:
  MultiIndex where_;
};

}  // namespace sdym
