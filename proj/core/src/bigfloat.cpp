#include "stex/bigfloat.hpp"

#include <mpfr.h>

#include "stex/errors.hpp"

namespace stex {

namespace {
unsigned g_digits = kDefaultDigits;
// apply the default before main(); Boost's own variable-precision default
// is far below kDefaultDigits
const bool g_precision_applied = [] {
  BigFloat::default_precision(kDefaultDigits);
  return true;
}();
}

unsigned working_digits() { return g_digits; }

void set_working_digits(unsigned digits) {
  if (digits < 16) throw DomainError("working precision must be >= 16 digits");
  g_digits = digits;
  BigFloat::default_precision(digits);
}

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(g_digits) {
  if (digits > saved_) {
    g_digits = digits;
    BigFloat::default_precision(digits);
  }
}

PrecisionGuard::~PrecisionGuard() {
  g_digits = saved_;
  BigFloat::default_precision(saved_);
}

BigFloat pi_value() {
  BigFloat out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat working_eps() {
  BigFloat one(1);
  BigFloat out;
  mpfr_set_ui_2exp(out.backend().data(), 1,
                   1 - static_cast<long>(mpfr_get_prec(one.backend().data())),
                   MPFR_RNDN);
  return out;
}

BigFloat expm1(const BigFloat& x) {
  BigFloat out;
  mpfr_expm1(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat log1p(const BigFloat& x) {
  BigFloat out;
  mpfr_log1p(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat frac(const BigFloat& t) {
  BigFloat f = t - floor(t);
  if (f < 0) f += 1;        // guard against directed-rounding edge
  if (f >= 1) f -= 1;
  return f;
}

namespace {

// sin(pi r) for r in [-1/2, 1/2]; mpfr_sin is fully accurate there and the
// zero at r = 0 is exact.
BigFloat sin_pi_reduced(const BigFloat& r) {
  if (r == 0) return BigFloat(0);
  return sin(pi_value() * r);
}

// reduce mod 2 into [0, 2); exact because subtracting the nearby even
// integer cannot increase the exponent
BigFloat mod2(const BigFloat& t) {
  BigFloat r = t - 2 * floor(t / 2);
  if (r < 0) r += 2;
  if (r >= 2) r -= 2;
  return r;
}

}  // namespace

BigFloat sin_pi(const BigFloat& t) {
  BigFloat r = mod2(t);
  int sign = 1;
  if (r >= 1) {
    r -= 1;  // exact
    sign = -1;
  }
  if (2 * r == 1) return BigFloat(sign);
  if (2 * r > 1) r = 1 - r;  // exact (Sterbenz)
  const BigFloat s = sin_pi_reduced(r);
  return sign > 0 ? s : BigFloat(-s);
}

BigFloat cos_pi(const BigFloat& t) {
  BigFloat r = mod2(t);
  if (r > 1) r = 2 - r;  // cos(2 pi - x) = cos(x), exact
  // cos(pi r) = sin(pi (1/2 - r)) with 1/2 - r in [-1/2, 1/2]
  return sin_pi_reduced(BigFloat(0.5) - r);
}

BigFloat dist_to_int(const BigFloat& t) {
  BigFloat f = frac(t);
  return f <= BigFloat(0.5) ? f : BigFloat(1 - f);
}

BigRat to_rational(const BigFloat& x) {
  if (!mpfr_number_p(x.backend().data()))
    throw DomainError("to_rational: non-finite value");
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x.backend().data());
  BigRat out(q);
  mpq_clear(q);
  return out;
}

BigFloat to_bigfloat(const BigRat& x) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat to_bigfloat(const BigInt& x) {
  BigFloat out;
  mpfr_set_z(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

}  // namespace stex
