#pragma once

#include <vector>

#include "stex/mellin.hpp"
#include "stex/series.hpp"

namespace stex {

/// Controls for the Filon inversion.  `panels` is the initial count; it is
/// doubled until successive densities move by less than
/// refinement_tolerance.  Only the classical quadratic Filon rule is
/// implemented (filon_degree == 2).
struct QuadConfig {
  BigFloat u_max = 40;
  int panels = 64;
  BigFloat refinement_tolerance = BigFloat("1e-9");
  int filon_degree = 2;
};

struct MellinSample {
  BigFloat u;
  BigComplex value;  // M(1+iu)
};

/// M(1+iu) on the Filon u-grid: 2*panels+1 uniform points on [0, u_max],
/// with the exact value M(1) = 1 at u = 0.
std::vector<MellinSample> mellin_samples(const StableParams& p,
                                         const QuadConfig& cfg);

/// Density for rational alpha by inverting the Mellin transform on Re(s)=1:
///   p(x) = (1/(pi x)) Re int_0^{u_max} M(1+iu) e^{-iu ln x} du,
/// Filon quadrature: quadratic interpolation of M on uniform panels and
/// exact integration of the oscillator (parameter ln x per point); the M
/// samples are computed once and shared across the grid.  Diagnostics carry
/// the per-point change of the last panel doubling.
DensityCurve invert_mellin(const StableParams& p,
                           const std::vector<BigFloat>& xs,
                           const QuadConfig& cfg = {});

/// Splice points for mass and CDF assembly: termwise convergent-series head
/// on (0, x_head], inversion in the middle, termwise asymptotic tail on
/// [x_tail, inf).  The head/tail truncation orders stay inside the range
/// where the series coefficients exist even at rational alpha.
struct DistributionSplit {
  BigFloat x_head = BigFloat("0.05");
  BigFloat x_tail = 6;
  int head_m = 2;
  int head_n = 1;
  int nodes = 2000;  // dense trapezoid grid for the middle piece
};

/// int_0^inf p with the tail completed by the asymptotic series.
BigFloat inversion_total_mass(const StableParams& p, const QuadConfig& cfg = {},
                              const DistributionSplit& split = {});

/// P(S <= x) at each query point (any order), assembled as above; values
/// clamped monotone into [0,1].  Queries below x_head / above x_tail use the
/// termwise series directly.
std::vector<BigFloat> inversion_cdf(const StableParams& p,
                                    const std::vector<BigFloat>& xs,
                                    const QuadConfig& cfg = {},
                                    const DistributionSplit& split = {});

}  // namespace stex
