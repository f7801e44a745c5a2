#pragma once

#include <stdexcept>
#include <string>

namespace stex {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation
/// (inadmissible (alpha, rho), |a| >= 1 in a q-Pochhammer symbol, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested exactly at a pole (Gamma at a nonpositive integer,
/// Mellin transform outside its strip of analyticity).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A principal-branch power or logarithm would be taken on the cut.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// A series term left the representable exponent range before cancellation.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A constructed big integer exceeded the configured size budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Series coefficients requested at (or indistinguishably close to) rational
/// alpha: a sine in one of the coefficient products vanishes.  Carries the
/// index j and the product side ('m' for sin(pi j / alpha), 'n' for
/// sin(pi alpha j)) of the first vanishing factor.
class RationalAlphaError : public DomainError {
 public:
  RationalAlphaError(const std::string& what, int index, char side)
      : DomainError(what), sine_index(index), product_side(side) {}
  int sine_index;
  char product_side;
};

}  // namespace stex
