#include "doctest.h"

#include "stex/errors.hpp"
#include "stex/series.hpp"
#include "stex/specfun.hpp"

using namespace stex;

namespace {
BigFloat bf(const char* s) { return BigFloat(s); }

// alpha = 3/2 + sqrt(2)/50: irrational, safely away from low denominators
StableParams perturbed() {
  return make_params(alpha_from_real(bf("1.5") + sqrt(BigFloat(2)) / 50),
                     BigFloat(3) / 5);
}

bool rel_close(const BigFloat& got, const char* want, const char* tol) {
  const BigFloat w = bf(want);
  return abs(got - w) <= bf(tol) * abs(w);
}
}  // namespace

TEST_CASE("series coefficients against quadrature-independent values") {
  const StableParams p = perturbed();
  CHECK(rel_close(coeff_a(p, 0, 0), "0.42719410394882413507", "1e-18"));
  CHECK(rel_close(coeff_a(p, 1, 0), "0.2294603593508462419", "1e-18"));
  CHECK(rel_close(coeff_a(p, 0, 1), "-0.054711782305189199293", "1e-18"));
  CHECK(rel_close(coeff_a(p, 2, 3), "0.00011652874795067147381", "1e-18"));
  CHECK(rel_close(coeff_b(p, 0, 1), "0.1113408026131099722", "1e-18"));
  CHECK(rel_close(coeff_b(p, 1, 1), "0.2030605797931867626", "1e-18"));

  // a_{0,0} = 1 / (Gamma(1-rho) Gamma(alpha rho)) directly
  const SignedLogGamma g1 = log_abs_gamma(1 - p.rho);
  const SignedLogGamma g2 = log_abs_gamma(p.alpha.value * p.rho);
  CHECK(abs(coeff_a(p, 0, 0) - exp(-g1.log_abs - g2.log_abs)) < bf("1e-32"));

  // Gamma(-0) pole makes the first asymptotic coefficient vanish
  CHECK(coeff_b(p, 0, 0) == 0);
}

TEST_CASE("coefficient table matches pointwise evaluation") {
  const StableParams p = perturbed();
  const CoeffTable t = build_coeff_table(p, CoeffKind::a, 6, 6);
  CHECK(t.at(0, 0) == coeff_a(p, 0, 0));
  CHECK(t.at(3, 2) == coeff_a(p, 3, 2));
  CHECK(t.at(6, 6) == coeff_a(p, 6, 6));
  CHECK(t.min_sin_denominator > 0);
  CHECK(t.min_sin_denominator < 1);
}

TEST_CASE("rational alpha is rejected with the vanishing index") {
  const StableParams p = make_params(alpha_from_rational(3, 2), bf("0.6"));
  // n-side sine sin(pi alpha j) hits zero first, at j = 2
  CHECK_THROWS_AS(coeff_a(p, 3, 2), RationalAlphaError);
  try {
    coeff_a(p, 3, 2);
  } catch (const RationalAlphaError& e) {
    CHECK(e.sine_index == 2);
    CHECK(e.product_side == 'n');
  }
  // with n capped below 2 the m-side zero at j = 3 is found instead
  try {
    coeff_a(p, 3, 1);
  } catch (const RationalAlphaError& e) {
    CHECK(e.sine_index == 3);
    CHECK(e.product_side == 'm');
  }
  // the density driver rejects exactly-rational alpha up front
  try {
    density_series(p, {BigFloat(1)}, SeriesRole::convergent, 10, 10);
    CHECK(false);
  } catch (const RationalAlphaError& e) {
    CHECK(e.sine_index == 2);
    CHECK(e.product_side == 'n');
  }
}

TEST_CASE("double-series density on both branches") {
  const StableParams p = perturbed();
  const std::vector<BigFloat> xs{bf("0.3"), BigFloat(1)};
  const DensityCurve conv = density_series(p, xs, SeriesRole::convergent, 60, 60);
  CHECK(conv.method == CurveMethod::convergent_series);
  CHECK(conv.trunc_m == 60);
  // frozen from an independent 60-digit evaluation, truncation-stable
  CHECK(rel_close(conv.ps[0], "0.530522727167069536182180070323", "1e-27"));
  CHECK(rel_close(conv.ps[1], "0.469837347390530318027340355412", "1e-27"));
  // convergent branch: boundary terms are negligible at this truncation
  CHECK(conv.diagnostics[1] < bf("1e-30"));

  const DensityCurve asym =
      density_series(p, {BigFloat(5)}, SeriesRole::asymptotic, 15, 15);
  CHECK(asym.method == CurveMethod::asymptotic_series);
  // frozen partial sum at the same truncation
  CHECK(rel_close(asym.ps[0], "0.00397126332146662132696598523232", "1e-27"));
  CHECK(asym.diagnostics[0] > 0);
  CHECK(asym.diagnostics[0] < bf("2e-6"));

  CHECK_THROWS_AS(density_series(p, {BigFloat(0)}, SeriesRole::convergent, 5, 5),
                  DomainError);
}

TEST_CASE("termwise mass accounts for the whole line") {
  const StableParams p = perturbed();
  const CoeffTable a = build_coeff_table(p, CoeffKind::a, 200, 200);
  const CoeffTable b = build_coeff_table(p, CoeffKind::b, 15, 16);
  const BigFloat X = 5;
  const BigFloat below = mass_from_zero(a, X);
  const BigFloat above = mass_to_infinity(b, X);
  CHECK(below > bf("0.99"));
  CHECK(above > bf("0.009"));
  CHECK(abs(below + above - 1) < bf("1e-4"));

  CHECK_THROWS_AS(mass_from_zero(b, X), DomainError);
  CHECK_THROWS_AS(mass_to_infinity(a, X), DomainError);
}

TEST_CASE("perturbation average of two irrational neighbours") {
  const StableParams base = make_params(alpha_from_rational(3, 2), bf("0.6"));
  const BigFloat delta = sqrt(BigFloat(2)) / 50;
  const std::vector<BigFloat> xs{BigFloat(1)};
  const DensityCurve avg = perturbation_average(base, delta, xs, 40, 40);

  const DensityCurve up = density_series(
      make_params(alpha_from_real(bf("1.5") + delta), bf("0.6")), xs,
      SeriesRole::convergent, 40, 40);
  const DensityCurve dn = density_series(
      make_params(alpha_from_real(bf("1.5") - delta), bf("0.6")), xs,
      SeriesRole::convergent, 40, 40);
  CHECK(abs(avg.ps[0] - (up.ps[0] + dn.ps[0]) / 2) < bf("1e-32"));

  CHECK_THROWS_AS(perturbation_average(base, BigFloat(0), xs, 10, 10),
                  DomainError);
  CHECK_THROWS_AS(perturbation_average(perturbed(), delta, xs, 10, 10),
                  DomainError);
}

TEST_CASE("near-rational diagnostics") {
  const NearRationalDiag d1 = near_rational_check(alpha_from_real(
      bf("1.5") + bf("1e-6")));
  CHECK(d1.near);
  CHECK(d1.num == 3);
  CHECK(d1.den == 2);
  CHECK(abs(d1.distance - bf("1e-6")) < bf("1e-12"));

  // 3/2 + sqrt(2)/50 is 5e-4 from its best den<=50 approximation 55/36
  const NearRationalDiag d2 = near_rational_check(perturbed().alpha);
  CHECK_FALSE(d2.near);
  CHECK(d2.den == 36);

  const NearRationalDiag d3 = near_rational_check(alpha_from_rational(3, 2));
  CHECK(d3.near);
  CHECK(d3.distance == 0);
}
