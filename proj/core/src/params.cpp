#include "stex/params.hpp"

#include <numeric>
#include <sstream>

#include "stex/errors.hpp"

namespace stex {

namespace {

void check_alpha_range(const BigFloat& a) {
  if (!(a > 0 && a < 2) || a == 1)
    throw DomainError("alpha must lie in (0,1) u (1,2)");
}

}  // namespace

Alpha alpha_from_rational(long num, long den) {
  if (den == 0) throw DomainError("alpha denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Alpha a;
  a.value = BigFloat(num) / den;
  check_alpha_range(a.value);
  a.exact_rational = true;
  a.num = num;
  a.den = den;
  return a;
}

Alpha alpha_from_real(const BigFloat& value) {
  check_alpha_range(value);
  Alpha a;
  a.value = value;
  return a;
}

StableParams make_params(Alpha alpha, BigFloat rho) {
  const BigFloat& a = alpha.value;
  check_alpha_range(a);
  if (a < 1) {
    if (!(rho > 0 && rho < 1))
      throw DomainError("alpha in (0,1) requires rho in (0,1)");
  } else {
    if (!(rho >= 1 - 1 / a && rho <= 1 / a))
      throw DomainError("alpha in (1,2) requires rho in [1-1/alpha, 1/alpha]");
  }
  return {std::move(alpha), std::move(rho)};
}

BigFloat rho_from_beta(const BigFloat& alpha, const BigFloat& beta) {
  check_alpha_range(alpha);
  if (!(beta >= -1 && beta <= 1)) throw DomainError("beta must lie in [-1,1]");
  BigFloat t = tan(pi_value() * alpha / 2);
  return BigFloat(0.5) + atan(beta * t) / (pi_value() * alpha);
}

BigFloat beta_from_rho(const BigFloat& alpha, const BigFloat& rho) {
  check_alpha_range(alpha);
  return tan(pi_value() * alpha * (rho - BigFloat(0.5))) /
         tan(pi_value() * alpha / 2);
}

BigFloat scale_c_from_rho(const BigFloat& alpha, const BigFloat& rho) {
  check_alpha_range(alpha);
  return cos(pi_value() * alpha * (rho - BigFloat(0.5)));
}

BigFloat levy_density(const StableParams& p, const BigFloat& x) {
  if (x == 0) throw DomainError("levy_density: x must be nonzero");
  const BigFloat& a = p.alpha.value;
  BigFloat side = x > 0 ? sin_pi(a * p.rho) : sin_pi(a * (1 - p.rho));
  return pow(abs(x), -1 - a) * side / (2 * sin_pi(a / 2));
}

Classification classify(const StableParams& p, const BigFloat& tol,
                        long k_max, long l_max) {
  Classification c;
  c.alpha_is_rational = p.alpha.exact_rational;
  if (c.alpha_is_rational) {
    c.alpha_num = p.alpha.num;
    c.alpha_den = p.alpha.den;
  }

  const BigFloat& a = p.alpha.value;
  if (a > 1) {
    // rho = 1/alpha has sin(pi alpha rho) = 0: no positive jumps
    if (abs(p.rho - 1 / a) <= tol)
      c.spectral_side = -1;
    else if (abs(p.rho - (1 - 1 / a)) <= tol)
      c.spectral_side = +1;
  }

  // resonance rho + k = l/alpha, l >= 1: k is forced once l is fixed, so
  // scan l upward and take the first hit (smallest l)
  for (long l = 1; l <= l_max && !c.doney_found; ++l) {
    const BigFloat target = BigFloat(l) / a - p.rho;
    const BigFloat k_real = round(target);
    if (abs(k_real) > BigFloat(k_max)) continue;
    const BigFloat res = abs(target - k_real);
    if (res <= tol) {
      c.doney_found = true;
      c.doney_k = k_real.convert_to<long>();
      c.doney_l = l;
      c.doney_residual = res;
    }
  }
  c.rho_resonant = c.doney_found;
  return c;
}

Classification classify(const StableParams& p) {
  return classify(p, BigFloat("1e-12"));
}

}  // namespace stex
