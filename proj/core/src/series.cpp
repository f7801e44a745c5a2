#include "stex/series.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stex/errors.hpp"
#include "stex/specfun.hpp"

namespace stex {

namespace {

struct LogSign {
  BigFloat log_abs;
  int sign = 1;  // 0 means the value is exactly zero
};

LogSign operator+(const LogSign& x, const LogSign& y) {
  if (x.sign == 0 || y.sign == 0) return {BigFloat(0), 0};
  return {x.log_abs + y.log_abs, x.sign * y.sign};
}

// prefix products prod_{j<=m} sin(pi(rho+(j-1)/alpha))/sin(pi j/alpha) and
// prod_{j<=n} sin(pi alpha(rho+j-1))/sin(pi alpha j) in log space
struct Prefixes {
  std::vector<LogSign> p1, p2;
  BigFloat min_sin_denom;
};

const BigFloat& sin_guard_threshold() {
  static const BigFloat t("1e-30");
  return t;
}

[[noreturn]] void throw_rational_alpha(int j, char side) {
  std::ostringstream os;
  os << "series coefficients undefined: denominator sine "
     << (side == 'm' ? "sin(pi j / alpha)" : "sin(pi alpha j)")
     << " vanishes at j = " << j << " (rational alpha)";
  throw RationalAlphaError(os.str(), j, side);
}

Prefixes build_prefixes(const StableParams& p, int max_m, int max_n) {
  const BigFloat& alpha = p.alpha.value;
  Prefixes out;
  out.p1.resize(max_m + 1);
  out.p2.resize(max_n + 1);
  out.p1[0] = {BigFloat(0), 1};
  out.p2[0] = {BigFloat(0), 1};
  out.min_sin_denom = 2;

  // scan denominators with j ascending across both sides so the first
  // vanishing index is reported deterministically
  std::vector<BigFloat> den1(max_m + 1), den2(max_n + 1);
  for (int j = 1; j <= std::max(max_m, max_n); ++j) {
    if (j <= max_n) {
      den2[j] = sin_pi(alpha * j);
      if (abs(den2[j]) < sin_guard_threshold()) throw_rational_alpha(j, 'n');
      out.min_sin_denom = std::min(out.min_sin_denom, abs(den2[j]));
    }
    if (j <= max_m) {
      den1[j] = sin_pi(BigFloat(j) / alpha);
      if (abs(den1[j]) < sin_guard_threshold()) throw_rational_alpha(j, 'm');
      out.min_sin_denom = std::min(out.min_sin_denom, abs(den1[j]));
    }
  }

  auto push = [](std::vector<LogSign>& dst, int j, const BigFloat& num,
                 const BigFloat& den) {
    const BigFloat ratio_num = abs(num);
    LogSign next = dst[j - 1];
    if (next.sign != 0) {
      if (ratio_num == 0) {
        next = {BigFloat(0), 0};
      } else {
        next.log_abs += log(ratio_num) - log(abs(den));
        next.sign *= (num > 0 ? 1 : -1) * (den > 0 ? 1 : -1);
      }
    }
    dst[j] = next;
  };
  for (int j = 1; j <= max_m; ++j)
    push(out.p1, j, sin_pi(p.rho + BigFloat(j - 1) / alpha), den1[j]);
  for (int j = 1; j <= max_n; ++j)
    push(out.p2, j, sin_pi(alpha * (p.rho + j - 1)), den2[j]);
  return out;
}

BigFloat coeff_from_prefixes(const StableParams& p, const Prefixes& pre,
                             CoeffKind kind, int m, int n) {
  const BigFloat& alpha = p.alpha.value;
  const LogSign prod = pre.p1[m] + pre.p2[n];
  if (prod.sign == 0) return BigFloat(0);
  SignedLogGamma g1, g2;
  if (kind == CoeffKind::a) {
    g1 = log_abs_gamma(1 - p.rho - n - BigFloat(m) / alpha);
    g2 = log_abs_gamma(alpha * p.rho + m + alpha * n);
  } else {
    g1 = log_abs_gamma(1 + n + BigFloat(m) / alpha);
    g2 = log_abs_gamma(-m - alpha * n);
  }
  if (g1.pole || g2.pole) return BigFloat(0);  // reciprocal-Gamma convention
  const int sign = ((m + n) % 2 ? -1 : 1) * prod.sign * g1.sign * g2.sign;
  const BigFloat value = exp(prod.log_abs - g1.log_abs - g2.log_abs);
  return sign > 0 ? value : BigFloat(-value);
}

void check_finite(const BigFloat& v, int m, int n, const char* what) {
  if (!mpfr_number_p(v.backend().data())) {
    std::ostringstream os;
    os << what << " overflowed the exponent range at (m,n)=(" << m << "," << n
       << ")";
    throw OverflowError(os.str());
  }
}

}  // namespace

const BigFloat& CoeffTable::at(int m, int n) const {
  return entries[static_cast<std::size_t>(m) * (max_n + 1) + n];
}

CoeffTable build_coeff_table(const StableParams& p, CoeffKind kind, int max_m,
                             int max_n) {
  if (max_m < 0 || max_n < 0) throw DomainError("coefficient table bounds must be >= 0");
  CoeffTable t;
  t.kind = kind;
  t.max_m = max_m;
  t.max_n = max_n;
  t.params = p;
  const Prefixes pre = build_prefixes(p, max_m, max_n);
  t.min_sin_denominator = pre.min_sin_denom;
  t.entries.resize(static_cast<std::size_t>(max_m + 1) * (max_n + 1));
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      BigFloat v = coeff_from_prefixes(p, pre, kind, m, n);
      check_finite(v, m, n, "series coefficient");
      t.entries[static_cast<std::size_t>(m) * (max_n + 1) + n] = std::move(v);
    }
  return t;
}

BigFloat coeff_a(const StableParams& p, int m, int n) {
  if (m < 0 || n < 0) throw DomainError("coeff_a requires m, n >= 0");
  const Prefixes pre = build_prefixes(p, m, n);
  return coeff_from_prefixes(p, pre, CoeffKind::a, m, n);
}

BigFloat coeff_b(const StableParams& p, int m, int n) {
  if (m < 0 || n < 0) throw DomainError("coeff_b requires m, n >= 0");
  const Prefixes pre = build_prefixes(p, m, n);
  return coeff_from_prefixes(p, pre, CoeffKind::b, m, n);
}

namespace {

// powers base^k for k = 0..kmax by a multiplication chain
std::vector<BigFloat> power_chain(const BigFloat& base, int kmax) {
  std::vector<BigFloat> out(kmax + 1);
  out[0] = 1;
  for (int k = 1; k <= kmax; ++k) out[k] = out[k - 1] * base;
  return out;
}

struct PointSum {
  BigFloat total;
  BigFloat boundary;  // largest |term| with m == max_m or n == max_n
};

// diagonal-by-diagonal sum of table(m, n + n_shift) * pm[m] * pn[n]
PointSum diagonal_sum(const CoeffTable& t, int n_shift,
                      const std::vector<BigFloat>& pm,
                      const std::vector<BigFloat>& pn) {
  const int M = t.max_m;
  const int N = static_cast<int>(pn.size()) - 1;
  PointSum out{BigFloat(0), BigFloat(0)};
  for (int d = 0; d <= M + N; ++d) {
    for (int m = std::max(0, d - N); m <= std::min(d, M); ++m) {
      const int n = d - m;
      const BigFloat term = t.at(m, n + n_shift) * pm[m] * pn[n];
      out.total += term;
      if (m == M || n == N)
        out.boundary = std::max(out.boundary, abs(term));
    }
  }
  return out;
}

}  // namespace

DensityCurve density_series(const StableParams& p,
                            const std::vector<BigFloat>& xs, SeriesRole role,
                            int max_m, int max_n) {
  if (p.alpha.exact_rational)
    throw_rational_alpha(static_cast<int>(std::min(p.alpha.num, p.alpha.den)),
                         p.alpha.num < p.alpha.den ? 'm' : 'n');
  const BigFloat& alpha = p.alpha.value;
  const bool use_a = (alpha > 1) == (role == SeriesRole::convergent);
  const CoeffTable table = build_coeff_table(
      p, use_a ? CoeffKind::a : CoeffKind::b, max_m, use_a ? max_n : max_n + 1);

  DensityCurve curve;
  curve.xs = xs;
  curve.method = role == SeriesRole::convergent ? CurveMethod::convergent_series
                                                : CurveMethod::asymptotic_series;
  curve.trunc_m = max_m;
  curve.trunc_n = max_n;
  curve.ps.reserve(xs.size());
  curve.diagnostics.reserve(xs.size());
  for (const BigFloat& x : xs) {
    if (!(x > 0)) throw DomainError("density_series requires x > 0");
    const BigFloat lx = log(x);
    BigFloat prefactor;
    PointSum sum;
    if (use_a) {
      // p(x) = x^{alpha rho - 1} sum a_{m,n} x^{m + alpha n}
      const std::vector<BigFloat> pm = power_chain(x, max_m);
      const std::vector<BigFloat> pn = power_chain(exp(alpha * lx), max_n);
      sum = diagonal_sum(table, 0, pm, pn);
      prefactor = exp((alpha * p.rho - 1) * lx);
    } else {
      // p(x) = x^{-1-alpha} sum b_{m,n+1} x^{-m - alpha n}
      const BigFloat xi = 1 / x;
      const std::vector<BigFloat> pm = power_chain(xi, max_m);
      const std::vector<BigFloat> pn = power_chain(exp(-alpha * lx), max_n);
      sum = diagonal_sum(table, 1, pm, pn);
      prefactor = exp((-1 - alpha) * lx);
    }
    const BigFloat value = prefactor * sum.total;
    check_finite(value, max_m, max_n, "series partial sum");
    curve.ps.push_back(value);
    curve.diagnostics.push_back(prefactor * sum.boundary);
  }
  return curve;
}

DensityCurve perturbation_average(const StableParams& base, const BigFloat& delta,
                                  const std::vector<BigFloat>& xs, int max_m,
                                  int max_n) {
  if (!base.alpha.exact_rational)
    throw DomainError("perturbation_average requires an exactly rational base alpha");
  if (delta == 0)
    throw DomainError("perturbation_average requires a nonzero delta "
                      "(delta = 0 keeps alpha rational)");
  const StableParams plus =
      make_params(alpha_from_real(base.alpha.value + delta), base.rho);
  const StableParams minus =
      make_params(alpha_from_real(base.alpha.value - delta), base.rho);
  DensityCurve up = density_series(plus, xs, SeriesRole::convergent, max_m, max_n);
  const DensityCurve dn =
      density_series(minus, xs, SeriesRole::convergent, max_m, max_n);
  for (std::size_t i = 0; i < up.ps.size(); ++i) {
    up.ps[i] = (up.ps[i] + dn.ps[i]) / 2;
    up.diagnostics[i] = std::max(up.diagnostics[i], dn.diagnostics[i]);
  }
  return up;
}

BigFloat mass_from_zero(const CoeffTable& a_table, const BigFloat& X) {
  if (a_table.kind != CoeffKind::a)
    throw DomainError("mass_from_zero expects an a-kind table");
  if (!(X > 0)) throw DomainError("mass_from_zero requires X > 0");
  const StableParams& p = a_table.params;
  const BigFloat& alpha = p.alpha.value;
  const BigFloat lX = log(X);
  const std::vector<BigFloat> pm = power_chain(X, a_table.max_m);
  const std::vector<BigFloat> pn = power_chain(exp(alpha * lX), a_table.max_n);
  const BigFloat head = exp(alpha * p.rho * lX);
  BigFloat total = 0;
  for (int d = 0; d <= a_table.max_m + a_table.max_n; ++d)
    for (int m = std::max(0, d - a_table.max_n); m <= std::min(d, a_table.max_m); ++m) {
      const int n = d - m;
      const BigFloat e = alpha * p.rho + m + alpha * n;
      total += a_table.at(m, n) * head * pm[m] * pn[n] / e;
    }
  check_finite(total, a_table.max_m, a_table.max_n, "termwise mass");
  return total;
}

BigFloat mass_to_infinity(const CoeffTable& b_table, const BigFloat& X) {
  if (b_table.kind != CoeffKind::b)
    throw DomainError("mass_to_infinity expects a b-kind table");
  if (!(X > 0)) throw DomainError("mass_to_infinity requires X > 0");
  const StableParams& p = b_table.params;
  const BigFloat& alpha = p.alpha.value;
  const BigFloat lX = log(X);
  const std::vector<BigFloat> pm = power_chain(1 / X, b_table.max_m);
  const std::vector<BigFloat> pn = power_chain(exp(-alpha * lX), b_table.max_n);
  BigFloat total = 0;
  for (int m = 0; m <= b_table.max_m; ++m)
    for (int nt = 1; nt <= b_table.max_n; ++nt) {
      const BigFloat e = m + alpha * nt;
      total += b_table.at(m, nt) * pm[m] * pn[nt] / e;
    }
  check_finite(total, b_table.max_m, b_table.max_n, "termwise tail mass");
  return total;
}

NearRationalDiag near_rational_check(const Alpha& alpha, const BigFloat& tol,
                                     long den_max) {
  NearRationalDiag out;
  out.distance = 2;
  for (long den = 1; den <= den_max; ++den) {
    const BigFloat num_real = round(alpha.value * den);
    const long num = num_real.convert_to<long>();
    if (num <= 0) continue;
    const BigFloat dist = abs(alpha.value - num_real / den);
    if (dist < out.distance) {
      const long g = std::gcd(num, den);
      out.num = num / g;
      out.den = den / g;
      out.distance = dist;
    }
  }
  out.near = out.distance <= tol;
  return out;
}

}  // namespace stex
