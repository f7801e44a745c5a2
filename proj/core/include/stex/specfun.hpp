#pragma once

#include <vector>

#include "stex/complex.hpp"

namespace stex {

/// Exact Bernoulli number B_{2j} (B_2 = 1/6, B_4 = -1/30, ...).
const BigRat& bernoulli_2n(unsigned j);

/// Cached table of zeta(2n)-1 for n = 1..count at the current working
/// precision, computed by direct summation sum_{k>=2} k^{-2n} with an
/// Euler-Maclaurin tail evaluated to a rigorous bound.
const std::vector<BigFloat>& zeta2n_minus1(std::size_t count);

/// Dilogarithm, principal branch, |z| <= 1.  Three regimes:
///   |1-z| < 1/10 : reflection  Li2(z) = -Li2(1-z) + pi^2/6 - log(1-z)log(z)
///   |z|  <= 1/2  : power series sum z^k / k^2
///   otherwise    : series in w = log(1-z) with zeta(2n)-1 coefficients,
///                  terms bounded by 3/20^n
BigComplex dilog(const BigComplex& z);

/// Principal-branch complex log-gamma via Stirling's series with argument
/// shifting.  Requires Re(z) > 0 or Im(z) != 0.
BigComplex log_gamma(const BigComplex& z);

/// log|Gamma(x)| with the sign of Gamma(x) for real x (reflection formula
/// for x < 0).  pole is set at nonpositive integers; by the reciprocal
/// convention 1/Gamma evaluates to 0 there.
struct SignedLogGamma {
  BigFloat log_abs;
  int sign = 1;
  bool pole = false;
};
SignedLogGamma log_abs_gamma(const BigFloat& x);

/// Modified q-Pochhammer symbol
///   [a; q]_n = prod_{k=1}^{n-1} (1 - a q^k)^{k/n}
/// with principal-branch powers; requires |a| < 1, |q| <= 1.
BigComplex q_pochhammer_mod(const BigComplex& a, const BigComplex& q, int n);

/// Building block of the rational-alpha Mellin transform, m, n coprime,
/// Im(s) > 0 (real-axis values are obtained by the callers via lifting):
///   H_{m,n}(s) = e^{-Li2(e^{2 pi i s})/(2 pi i m n)}
///                * (1 - e^{2 pi i s})^{1 - s/(m n)}
///                / ( [e^{2 pi i s/m}; e^{2 pi i n/m}]_m
///                  * [e^{2 pi i s/n}; e^{2 pi i m/n}]_n ).
/// Symmetric in (m, n).
BigComplex h_mn(int m, int n, const BigComplex& s);

}  // namespace stex
