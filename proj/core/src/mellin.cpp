#include "stex/mellin.hpp"

#include "stex/errors.hpp"
#include "stex/specfun.hpp"

namespace stex {

BigComplex psi_exponent(const StableParams& p, const BigFloat& u) {
  if (u == 0) return BigComplex(BigFloat(0));
  const BigFloat au = abs(u);
  const BigFloat mod = exp(p.alpha.value * log(au));
  const BigFloat theta = p.alpha.value * (p.rho - BigFloat(0.5));
  const BigFloat c = cos_pi(theta);
  const BigFloat s = sin_pi(theta);
  return u > 0 ? BigComplex(mod * c, -mod * s) : BigComplex(mod * c, mod * s);
}

namespace {

// integrand of the factorization integral after u = sign * e^t
BigComplex wh_integrand(const StableParams& p, const BigComplex& z, int sign,
                        const BigFloat& t) {
  const BigFloat u = sign > 0 ? exp(t) : BigFloat(-exp(t));
  const BigComplex log_term = -clog1p(psi_exponent(p, u));
  const BigComplex iz(-z.im, z.re);
  const BigComplex denom = BigComplex(u) * (BigComplex(u) - iz);
  return log_term / denom * abs(u);  // du = |u| dt
}

}  // namespace

BigComplex wh_factor_log(const StableParams& p, const BigComplex& z,
                         const QuadOptions& quad_cfg) {
  if (!(z.re > 0)) throw DomainError("wh_factor_log requires Re(z) > 0");
  const BigFloat digits(static_cast<int>(working_digits()));
  const BigFloat ln10 = log(BigFloat(10));
  // e^{alpha t} decay on the left, t e^{-t} on the right
  const BigFloat t_lo = -(digits + 6) * ln10 / p.alpha.value;
  const BigFloat t_hi = (digits + 6) * ln10 + 2 * log(1 + abs(z)) + 10;
  // The z/(2 pi) prefactor lives inside the integrand so quad_cfg tolerances
  // are read against log phi itself; the raw branch integrals shrink like 1/z
  // and would satisfy abs_tol long before the scaled result is accurate.
  const BigComplex scale = z / (2 * pi_value());
  BigComplex total(BigFloat(0));
  for (int sign : {+1, -1}) {
    auto f = [&p, &z, sign, &scale](const BigFloat& t) {
      return wh_integrand(p, z, sign, t) * scale;
    };
    total += integrate_complex(f, t_lo, t_hi, quad_cfg);
  }
  return total;
}

BigFloat phi_from_darling(const StableParams& p, const BigFloat& z,
                          const QuadOptions& quad_cfg) {
  if (!(z > 0)) throw DomainError("phi_from_darling requires z > 0");
  const BigComplex lp = wh_factor_log(p, BigComplex(z), quad_cfg);
  BigFloat tol = quad_cfg.rel_tol > 0
                     ? quad_cfg.rel_tol * 100
                     : pow(BigFloat(10), -static_cast<int>(working_digits()) + 10);
  if (abs(lp.im) > tol * (1 + abs(lp.re)))
    throw QuadratureError("factorization integral produced a non-real log phi");
  return exp(lp.re);
}

std::pair<BigFloat, BigFloat> mellin_strip(const StableParams& p) {
  return {1 - p.alpha.value * p.rho, 1 + p.alpha.value};
}

MellinValue mellin_rational(const StableParams& p, const BigComplex& s) {
  if (!p.alpha.exact_rational)
    throw DomainError("mellin_rational requires an exactly rational alpha = m/n");
  if (!(s.im > 0))
    throw DomainError("mellin_rational requires Im(s) > 0; use mellin_real_axis");
  const int m = static_cast<int>(p.alpha.num);
  const int n = static_cast<int>(p.alpha.den);
  const BigFloat n_over_m = BigFloat(n) / m;
  const BigFloat eps_h("1e-25");
  const BigFloat m_rho = m * p.rho;

  const BigComplex h1 = h_mn(m, n, BigComplex(m_rho, eps_h));
  const BigComplex h2 = h_mn(m, n, s * n);
  const BigComplex h3 =
      h_mn(m, n, (s - BigComplex(1)) * n + BigComplex(m_rho, eps_h));

  // pi i [ (m^2 + n^2 - 3 m n)/(12 m n) + (n/m - rho)(s - 1) ]
  const BigComplex w = (n_over_m - p.rho) * (s - BigComplex(1));
  const BigComplex exponent =
      pi_value() *
      BigComplex(-w.im, w.re + BigFloat(m * m + n * n - 3 * m * n) / (12 * m * n));
  const BigComplex pref = sqrt(n_over_m) * cexp(exponent);

  const BigComplex gam_ratio =
      cexp(log_gamma(s) - log_gamma(BigComplex(1) - n_over_m * (BigComplex(1) - s)));

  MellinValue out;
  out.s = s;
  out.value = pref * gam_ratio * h1 * h2 / h3;
  out.params = p;
  out.method = MellinMethod::closed_form_rational;
  return out;
}

BigFloat mellin_real_axis(const StableParams& p, const BigFloat& sigma) {
  if (!p.alpha.exact_rational)
    throw DomainError("mellin_real_axis requires an exactly rational alpha");
  if (sigma == 1) return BigFloat(1);
  const BigFloat e0("1e-4");
  const BigComplex v0 = mellin_rational(p, BigComplex(sigma, e0)).value;
  const BigComplex v1 = mellin_rational(p, BigComplex(sigma, e0 / 2)).value;
  const BigComplex v2 = mellin_rational(p, BigComplex(sigma, e0 / 4)).value;
  // v(eps) = v + c1 eps + c2 eps^2; two rounds of step-halving extrapolation
  const BigComplex v01 = 2 * v1 - v0;
  const BigComplex v12 = 2 * v2 - v1;
  const BigComplex ext = (4 * v12 - v01) / 3;
  if (abs(ext.im) > BigFloat("1e-8") * (1 + abs(ext.re)))
    throw QuadratureError("real-axis Mellin extrapolation left a large imaginary part");
  return ext.re;
}

MomentCheck moment_crosscheck(const StableParams& p, const BigFloat& w,
                              const QuadOptions& quad_cfg) {
  const BigFloat arho = p.alpha.value * p.rho;
  if (!(w > 0 && w < arho))
    throw DomainError("moment_crosscheck requires 0 < w < alpha * rho");
  MomentCheck out;
  out.w = w;

  // closed-form side
  const BigFloat lg =
      log_gamma(BigComplex(w)).re + log_gamma(BigComplex(1 - w / p.alpha.value)).re;
  out.rhs = exp(lg) * mellin_real_axis(p, 1 - w);

  // oracle side: substitute z = e^v; phi decays like z^{-alpha rho}.
  // Default tolerances well below the 1e-5 use case but far cheaper than
  // full working precision; caller can tighten via quad_cfg.
  QuadOptions inner = quad_cfg;
  if (inner.rel_tol == 0) inner.rel_tol = BigFloat("1e-14");
  if (inner.abs_tol == 0) inner.abs_tol = BigFloat("1e-16");
  QuadOptions outer;
  outer.rel_tol = BigFloat("1e-11");
  outer.abs_tol = BigFloat("1e-13");
  const BigFloat ln10 = log(BigFloat(10));
  const BigFloat v_lo = -14 * ln10 / w;
  const BigFloat v_hi = 14 * ln10 / (arho - w);
  auto f = [&](const BigFloat& v) {
    const BigFloat z = exp(v);
    return exp(w * v) * phi_from_darling(p, z, inner);
  };
  out.lhs = integrate(f, v_lo, v_hi, outer);
  out.rel_gap = abs(out.lhs - out.rhs) / abs(out.rhs);
  return out;
}

}  // namespace stex
