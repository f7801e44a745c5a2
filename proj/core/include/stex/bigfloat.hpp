#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace stex {

namespace bmp = boost::multiprecision;

/// Extended-precision real.  Precision is set per computation context via
/// set_working_digits(); all values constructed afterwards carry it.
using BigFloat = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

/// Exact big integer / rational (continued fractions, witness bounds).
using BigInt = bmp::mpz_int;
using BigRat = bmp::mpq_rational;

constexpr unsigned kDefaultDigits = 34;

/// Decimal digits of the current working precision.
unsigned working_digits();

/// Sets the working precision (significant decimal digits, >= 16).
void set_working_digits(unsigned digits);

/// Temporarily raises the working precision; restores it on scope exit.
/// Used for guard digits inside kernels (zeta tail, Stirling shifts).
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// pi at the current working precision.
BigFloat pi_value();

/// Machine epsilon of the current working precision (10^{1-digits} scale).
BigFloat working_eps();

/// sin(pi*t) and cos(pi*t) with the argument reduced modulo 2 before
/// multiplication by pi, so accuracy degrades only with |t|'s own rounding.
BigFloat sin_pi(const BigFloat& t);
BigFloat cos_pi(const BigFloat& t);

/// e^x - 1 and log(1+x) without cancellation for small |x|.
BigFloat expm1(const BigFloat& x);
BigFloat log1p(const BigFloat& x);

/// Distance from t to the nearest integer, ||t|| in [0, 1/2].
BigFloat dist_to_int(const BigFloat& t);

/// Fractional part t - floor(t) in [0, 1).
BigFloat frac(const BigFloat& t);

/// Converts a BigFloat (an exact binary rational) to the exact BigRat.
BigRat to_rational(const BigFloat& x);

/// Rational value at working precision.
BigFloat to_bigfloat(const BigRat& x);
BigFloat to_bigfloat(const BigInt& x);

}  // namespace stex
