#pragma once

#include "stex/bigfloat.hpp"

namespace stex {

/// Stability index with optional exact-rational identity.  Coefficient
/// formulas and the Mellin closed form branch on exact rationality, which a
/// rounded value cannot represent, so it travels with the number.
struct Alpha {
  BigFloat value;
  bool exact_rational = false;
  long num = 0;  // coprime pair, den > 0, only meaningful when exact_rational
  long den = 1;
};

/// alpha = num/den reduced to lowest terms; must lie in (0,1) u (1,2).
Alpha alpha_from_rational(long num, long den);

/// alpha from an extended-precision value in (0,1) u (1,2).
Alpha alpha_from_real(const BigFloat& value);

/// Admissible parameter pair: alpha in (0,1) u (1,2) and
///   alpha in (0,1): rho in (0,1)
///   alpha in (1,2): rho in [1 - 1/alpha, 1/alpha]
struct StableParams {
  Alpha alpha;
  BigFloat rho;
};

/// Validates (alpha, rho); throws DomainError otherwise.
StableParams make_params(Alpha alpha, BigFloat rho);

/// Positivity parameter from the skewness:
///   rho = 1/2 + arctan(beta tan(pi alpha/2)) / (pi alpha), beta in [-1,1].
BigFloat rho_from_beta(const BigFloat& alpha, const BigFloat& beta);

/// Skewness from the positivity parameter:
///   beta = tan(pi alpha (rho - 1/2)) / tan(pi alpha / 2).
BigFloat beta_from_rho(const BigFloat& alpha, const BigFloat& rho);

/// Scale factor c = cos(pi alpha (rho - 1/2)); with beta_from_rho it
/// satisfies c^2 (1 + beta^2 tan^2(pi alpha/2)) = 1, which normalizes the
/// characteristic exponent to Psi(z) = |z|^alpha e^{-i pi alpha (rho-1/2) sgn z}.
BigFloat scale_c_from_rho(const BigFloat& alpha, const BigFloat& rho);

/// Levy measure density at x != 0:
///   |x|^{-1-alpha} [ sin(pi alpha rho) 1{x>0} + sin(pi alpha (1-rho)) 1{x<0} ]
///   / (2 sin(pi alpha / 2)).
BigFloat levy_density(const StableParams& p, const BigFloat& x);

/// Structural report for a parameter pair.
struct Classification {
  bool alpha_is_rational = false;
  long alpha_num = 0, alpha_den = 0;  // when rational
  int spectral_side = 0;   // +1 only positive jumps, -1 only negative, 0 both
  bool rho_resonant = false;  // rho + k = l/alpha within tol for some (k,l)
  bool doney_found = false;
  long doney_k = 0, doney_l = 0;
  BigFloat doney_residual;
};

/// Detects rationality of alpha, jump sidedness, and resonance of rho with
/// the lattice rho + k = l/alpha (searched over |k| <= k_max, |l| <= l_max).
Classification classify(const StableParams& p, const BigFloat& tol,
                        long k_max = 16, long l_max = 32);
Classification classify(const StableParams& p);

}  // namespace stex
