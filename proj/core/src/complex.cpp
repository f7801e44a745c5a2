#include "stex/complex.hpp"

#include "stex/errors.hpp"

namespace stex {

BigComplex clog(const BigComplex& z) {
  if (z.re == 0 && z.im == 0) throw BranchError("clog: argument is zero");
  return {log(abs(z)), atan2(z.im, z.re)};
}

BigComplex cexpm1(const BigComplex& z) {
  // expm1(x)cos y - 2 sin^2(y/2) + i e^x sin y: each piece is second order
  // in small arguments, so no cancellation near z = 0
  BigFloat em = expm1(z.re);
  BigFloat sy = sin(z.im), s2 = sin(z.im / 2);
  return {em * cos(z.im) - 2 * s2 * s2, (em + 1) * sy};
}

BigComplex clog1p(const BigComplex& z) {
  BigFloat t = 2 * z.re + z.re * z.re + z.im * z.im;  // |1+z|^2 - 1
  return {log1p(t) / 2, atan2(z.im, 1 + z.re)};
}

BigComplex cpow(const BigComplex& z, const BigComplex& w) {
  if (z.re == 0 && z.im == 0) {
    if (w.im == 0 && w.re > 0) return BigComplex(BigFloat(0));
    throw BranchError("cpow: zero base with nonpositive exponent");
  }
  return cexp(w * clog(z));
}

BigComplex cexp_2pii(const BigComplex& s) {
  BigFloat theta = 2 * pi_value() * frac(s.re);
  BigFloat m = exp(-2 * pi_value() * s.im);
  return {m * cos(theta), m * sin(theta)};
}

BigComplex cexpm1_2pii(const BigComplex& s) {
  // reduce Re(s) to [-1/2, 1/2) so that near-integer arguments give small
  // theta and the cexpm1 pieces keep full relative accuracy
  BigFloat r = frac(s.re);
  if (r >= BigFloat(0.5)) r -= 1;
  return cexpm1({-2 * pi_value() * s.im, 2 * pi_value() * r});
}

}  // namespace stex
