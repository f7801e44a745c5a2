#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stex/params.hpp"

namespace stex {

/// Monte-Carlo controls.  Identical (config, seed) reproduces identical
/// output bit-for-bit: the engine is std::mt19937_64 with per-path seeds
/// derived by splitmix64, uniforms are built from the top 53 bits, and no
/// platform-dependent distribution adapters are involved.
struct McConfig {
  long paths = 10000;
  long grid_steps = 100;  // time discretization of the supremum
  std::uint64_t seed = 1;
  bool antithetic = false;  // pair odd paths with mirrored uniforms
};

/// i.i.d. samples of X_1 by the exact trigonometric construction in the
/// (alpha, rho) parametrization; empirical P(X > 0) converges to rho.
std::vector<double> sample_stable(const StableParams& p, long n,
                                  std::uint64_t seed);

/// Discretized running-maximum samples of S_t: per path, the max of the
/// random walk with grid_steps increments of X_{t/grid_steps}, including
/// the time-0 value 0, so every sample is >= 0.  The discretization bias
/// is negative (the true supremum exceeds any grid maximum) and shrinks
/// as grid_steps grows; it is documented, not corrected.  Sorted output.
std::vector<double> sample_sup(const StableParams& p, const McConfig& cfg,
                               double t);

/// S_{e(1)}: per path draws T ~ Exp(1), then the discretized supremum over
/// [0, T].  mean(exp(-z S)) estimates the Wiener-Hopf factor phi(z).
/// Sorted output.
std::vector<double> sample_sup_exp_time(const StableParams& p,
                                        const McConfig& cfg);

/// Fraction of strictly positive entries.
double positive_fraction(const std::vector<double>& xs);

/// (mean, standard error) of exp(-z x) over the sample.
std::pair<double, double> laplace_estimate(const std::vector<double>& xs,
                                           double z);

/// Kolmogorov distance between the empirical CDF of the sorted sample and
/// a reference CDF evaluated at the sample points.
double ks_distance(const std::vector<double>& sorted_samples,
                   const std::vector<double>& cdf_at_samples);

/// Kolmogorov distance between two empirical CDFs (both inputs sorted).
/// Tie blocks are consumed from both samples before the gap is recorded;
/// this matters because sample_sup carries an atom at 0 (paths that never
/// go positive), and a naive merge would inflate the distance by roughly
/// half that atom's mass.
double ks_distance_two_sample(const std::vector<double>& a_sorted,
                              const std::vector<double>& b_sorted);

}  // namespace stex
