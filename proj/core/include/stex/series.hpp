#pragma once

#include <vector>

#include "stex/params.hpp"

namespace stex {

enum class CoeffKind { a, b };
enum class SeriesRole { convergent, asymptotic };
enum class CurveMethod { convergent_series, asymptotic_series, mellin_inversion, mc };

/// Triangular coefficient table for the double-series density expansions.
/// Entries are computed in log-space with separate sign tracking and stored
/// as values (the extended exponent range makes the final exp safe).
struct CoeffTable {
  CoeffKind kind = CoeffKind::a;
  int max_m = 0, max_n = 0;
  StableParams params;
  BigFloat min_sin_denominator;  // smallest |sin| among denominator factors
  std::vector<BigFloat> entries;

  const BigFloat& at(int m, int n) const;
};

CoeffTable build_coeff_table(const StableParams& p, CoeffKind kind, int max_m,
                             int max_n);

/// a_{m,n} = (-1)^{m+n} / (Gamma(1-rho-n-m/alpha) Gamma(alpha rho+m+alpha n))
///           * prod_{j=1}^m sin(pi(rho+(j-1)/alpha))/sin(pi j/alpha)
///           * prod_{j=1}^n sin(pi alpha(rho+j-1))/sin(pi alpha j).
/// Gamma reciprocals at poles evaluate to 0.  Throws RationalAlphaError,
/// recording the index j and which side's sine vanished, when a denominator
/// sine falls below 1e-30 — the rational-alpha breakdown.
BigFloat coeff_a(const StableParams& p, int m, int n);

/// b_{m,n} = a_{m,n} * Gamma(1-rho-n-m/alpha) Gamma(alpha rho+m+alpha n)
///           / (Gamma(1+n+m/alpha) Gamma(-m-alpha n));  b_{0,0} = 0.
BigFloat coeff_b(const StableParams& p, int m, int n);

/// Density curve on a grid, shared by the series, inversion and MC methods.
struct DensityCurve {
  std::vector<BigFloat> xs;
  std::vector<BigFloat> ps;
  std::vector<BigFloat> diagnostics;  // boundary-term magnitude, density units
  CurveMethod method = CurveMethod::convergent_series;
  int trunc_m = 0, trunc_n = 0;  // series truncation, when applicable
  BigFloat u_max = 0;            // quadrature settings, when applicable
  int panels = 0;
};

/// Double-series density.  For alpha in (1,2) the convergent role is
///   p(x) = x^{alpha rho - 1} sum a_{m,n} x^{m + alpha n}
/// and the asymptotic role is
///   p(x) = x^{-1-alpha} sum b_{m,n+1} x^{-m - alpha n};
/// for alpha in (0,1) the two formulas swap roles.  Diagnostics carry the
/// largest term magnitude on the truncation boundary (error proxy).
/// Summation is diagonal-by-diagonal (m+n increasing) for reproducibility.
DensityCurve density_series(const StableParams& p,
                            const std::vector<BigFloat>& xs, SeriesRole role,
                            int max_m = 200, int max_n = 200);

/// p~(x) = (p(x; alpha0+delta, rho) + p(x; alpha0-delta, rho)) / 2 with both
/// perturbed alphas stored as irrationals; alpha0 must be exactly rational.
DensityCurve perturbation_average(const StableParams& base, const BigFloat& delta,
                                  const std::vector<BigFloat>& xs,
                                  int max_m = 200, int max_n = 200);

/// Termwise integral of the a-series over (0, X]:
///   sum a_{m,n} X^{alpha rho + m + alpha n} / (alpha rho + m + alpha n).
BigFloat mass_from_zero(const CoeffTable& a_table, const BigFloat& X);

/// Termwise integral of the b-series over [X, inf):
///   sum_{m, n>=1} b_{m,n} X^{-(m + alpha n)} / (m + alpha n).
BigFloat mass_to_infinity(const CoeffTable& b_table, const BigFloat& X);

/// Diagnostic for alpha within tol of a low-denominator rational, where the
/// series method loses accuracy and inversion should be preferred.
struct NearRationalDiag {
  bool near = false;
  long num = 0, den = 0;
  BigFloat distance;
};
NearRationalDiag near_rational_check(const Alpha& alpha,
                                     const BigFloat& tol = BigFloat("1e-4"),
                                     long den_max = 50);

}  // namespace stex
