#pragma once

#include "stex/bigfloat.hpp"

namespace stex {

/// Complex number over BigFloat.  std::complex requires a builtin floating
/// type, so the handful of operations we need live here.
struct BigComplex {
  BigFloat re, im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r) : re(std::move(r)), im(0) {}           // NOLINT
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(int r) : re(r), im(0) {}                           // NOLINT
  BigComplex(double r) : re(r), im(0) {}                        // NOLINT
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigFloat& a, const BigComplex& b) {
  return {a * b.re, a * b.im};
}
inline BigComplex operator*(const BigComplex& a, const BigFloat& b) {
  return {a.re * b, a.im * b};
}
inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  // the huge exponent range makes the textbook formula safe
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline BigComplex operator/(const BigComplex& a, const BigFloat& b) {
  return {a.re / b, a.im / b};
}
// int/double overloads: without these, mixed expressions are ambiguous
// between the BigFloat and BigComplex conversions.
inline BigComplex operator*(const BigComplex& a, int b) { return a * BigFloat(b); }
inline BigComplex operator*(int a, const BigComplex& b) { return BigFloat(a) * b; }
inline BigComplex operator/(const BigComplex& a, int b) { return a / BigFloat(b); }
inline BigComplex operator+(const BigComplex& a, int b) { return a + BigComplex(b); }
inline BigComplex operator+(int a, const BigComplex& b) { return BigComplex(a) + b; }
inline BigComplex operator-(const BigComplex& a, int b) { return a - BigComplex(b); }
inline BigComplex operator-(int a, const BigComplex& b) { return BigComplex(a) - b; }
inline BigComplex& operator+=(BigComplex& a, const BigComplex& b) {
  a.re += b.re;
  a.im += b.im;
  return a;
}
inline BigComplex& operator-=(BigComplex& a, const BigComplex& b) {
  a.re -= b.re;
  a.im -= b.im;
  return a;
}
inline BigComplex& operator*=(BigComplex& a, const BigComplex& b) {
  a = a * b;
  return a;
}
inline BigComplex& operator/=(BigComplex& a, const BigComplex& b) {
  a = a / b;
  return a;
}

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }
inline BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

inline BigComplex cexp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal logarithm (cut along the negative real axis).
BigComplex clog(const BigComplex& z);

/// exp(z) - 1, accurate for small |z|.
BigComplex cexpm1(const BigComplex& z);

/// log(1 + z), accurate for small |z|.
BigComplex clog1p(const BigComplex& z);

/// Principal branch z^w = exp(w log z).
BigComplex cpow(const BigComplex& z, const BigComplex& w);

inline BigComplex csqrt(const BigComplex& z) {
  return cpow(z, BigComplex(BigFloat(0.5)));
}

/// exp(2*pi*i*s) with the real part of s reduced modulo 1 before use.
BigComplex cexp_2pii(const BigComplex& s);

/// exp(2*pi*i*s) - 1, accurate when s is close to an integer (the small
/// algebraic factors of the lifted-argument evaluations depend on this).
BigComplex cexpm1_2pii(const BigComplex& s);

}  // namespace stex
