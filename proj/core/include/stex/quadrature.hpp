#pragma once

#include <functional>
#include <vector>

#include "stex/complex.hpp"

namespace stex {

/// Gauss-Legendre rule on (-1, 1), recomputed per working precision by
/// Newton iteration on the Legendre recurrence.
struct GaussLegendre {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};
const GaussLegendre& gauss_legendre(int n);

/// Controls for the adaptive integrators.  Zero tolerances mean
/// "10^(6 - working_digits)".
struct QuadOptions {
  BigFloat rel_tol = 0;
  BigFloat abs_tol = 0;
  int max_depth = 48;
  int panel_order = 15;
  long max_evals = 4000000;
};

/// Globally adaptive quadrature: panels are bisected worst-error-first until
/// the summed error estimates drop under max(abs_tol, rel_tol * |I|); a
/// panel's error is the gap between its estimate and its halves'.  Reversed
/// limits negate the result.  Throws QuadratureError when the worst panel
/// reaches max_depth or the evaluation budget runs out.
BigFloat integrate(const std::function<BigFloat(const BigFloat&)>& f,
                   const BigFloat& a, const BigFloat& b,
                   const QuadOptions& opt = {});
BigComplex integrate_complex(const std::function<BigComplex(const BigFloat&)>& f,
                             const BigFloat& a, const BigFloat& b,
                             const QuadOptions& opt = {});

}  // namespace stex
