#pragma once

#include <utility>

#include "stex/params.hpp"
#include "stex/quadrature.hpp"

namespace stex {

/// Characteristic exponent at real frequency u:
///   Psi(u) = |u|^alpha * exp(-i pi alpha (rho - 1/2) sign u).
BigComplex psi_exponent(const StableParams& p, const BigFloat& u);

/// log phi(z) for Re(z) > 0 via the factorization integral
///   log phi(z) = (z / 2 pi) \int_R log(1/(1 + Psi(u))) du / (u (u - i z)),
/// evaluated after the substitution u = +-exp(t), which compresses both the
/// integrable |u|^{alpha-1} singularity at 0 and the tails.  Serves as the
/// independent oracle for the closed-form Mellin transform.
BigComplex wh_factor_log(const StableParams& p, const BigComplex& z,
                         const QuadOptions& quad_cfg = {});

/// exp(wh_factor_log) for real z > 0; checks that the imaginary part
/// vanishes to quadrature accuracy.
BigFloat phi_from_darling(const StableParams& p, const BigFloat& z,
                          const QuadOptions& quad_cfg = {});

/// Strip (1 - alpha rho, 1 + alpha) where M(s) = E[S^{s-1}] is finite.
/// The closed form below is its meromorphic continuation; poles outside the
/// strip surface through Gamma/H pole detection, not through this helper.
std::pair<BigFloat, BigFloat> mellin_strip(const StableParams& p);

enum class MellinMethod { closed_form_rational, oracle_quadrature };

struct MellinValue {
  BigComplex s;
  BigComplex value;
  StableParams params;
  MellinMethod method = MellinMethod::closed_form_rational;
};

/// Closed-form M(s) for rational alpha = m/n (coprime), Im(s) > 0:
///   M(s) = sqrt(n/m)
///          * exp( (pi i/(12 m n)) (m^2 + n^2 - 3 m n)
///                 + pi i (n/m - rho)(s - 1) )
///          * Gamma(s) / Gamma(1 - (n/m)(1 - s))
///          * H_{m,n}(m rho) H_{m,n}(n s) / H_{m,n}(n (s-1) + m rho).
/// The always-real arguments m*rho and n(s-1)+m*rho are lifted by i*1e-25;
/// the fused expm1 factors inside H keep the lifted values fully accurate,
/// including at the removable singularities where m*rho is an integer.
MellinValue mellin_rational(const StableParams& p, const BigComplex& s);

/// M(sigma) on the real axis: Richardson extrapolation of mellin_rational
/// over s = sigma + i*eps, eps in {1e-4, 5e-5, 2.5e-5}, which cancels the
/// linear and quadratic terms in eps.  M(1) = 1 is exact.
BigFloat mellin_real_axis(const StableParams& p, const BigFloat& sigma);

/// Cross-check of the closed form against the factorization oracle via
///   \int_0^inf z^{w-1} phi(z) dz = Gamma(w) Gamma(1 - w/alpha) M(1 - w),
/// valid for 0 < w < alpha rho.
struct MomentCheck {
  BigFloat w;
  BigFloat lhs;      // oracle side (quadrature over phi)
  BigFloat rhs;      // closed-form side
  BigFloat rel_gap;  // |lhs - rhs| / |rhs|
};
MomentCheck moment_crosscheck(const StableParams& p, const BigFloat& w,
                              const QuadOptions& quad_cfg = {});

}  // namespace stex
