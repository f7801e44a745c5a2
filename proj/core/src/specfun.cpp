#include "stex/specfun.hpp"

#include <cstddef>
#include <numeric>
#include <vector>

#include "stex/errors.hpp"

namespace stex {

namespace {

// All Bernoulli numbers B_0..B_max as exact rationals, grown on demand via
// the defining recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0.
const BigRat& bernoulli_all(std::size_t idx) {
  static std::vector<BigRat> cache{BigRat(1), BigRat(-1, 2)};
  while (cache.size() <= idx) {
    const std::size_t m = cache.size();
    BigRat acc(0);
    BigInt binom(1);  // C(m+1, k), starting at k = 0
    for (std::size_t k = 0; k < m; ++k) {
      acc += BigRat(binom) * cache[k];
      binom = binom * BigInt(m + 1 - k) / BigInt(k + 1);
    }
    // here binom = C(m+1, m) = m+1
    cache.push_back(-acc / BigRat(binom));
  }
  return cache[idx];
}

BigFloat pow_int(const BigFloat& x, long k) {
  return boost::multiprecision::pow(x, static_cast<int>(k));
}

}  // namespace

const BigRat& bernoulli_2n(unsigned j) { return bernoulli_all(2 * std::size_t(j)); }

namespace {

// zeta(s)-1 for even integer s >= 2: direct sum over k < K plus an
// Euler-Maclaurin tail for sum_{k>=K} k^{-s}.  The remainder after J
// correction terms is bounded by the magnitude of the first omitted term.
BigFloat zeta_minus1_even(long s, const BigFloat& target) {
  long K = 16;
  for (int attempt = 0; attempt < 8; ++attempt, K *= 2) {
    BigFloat direct = 0;
    for (long k = K - 1; k >= 2; --k) direct += pow_int(BigFloat(1) / k, s);
    const BigFloat Kf(K);
    const BigFloat invK = 1 / Kf;
    BigFloat tail = pow_int(invK, s - 1) / (s - 1) + pow_int(invK, s) / 2;
    // correction terms  B_{2j}/(2j)! * (s)_{2j-1} * K^{-s-2j+1}
    BigFloat rising = BigFloat(s);            // (s)_1
    BigFloat fact = 2;                        // (2j)!
    BigFloat kpow = pow_int(invK, s + 1);     // K^{-s-2j+1}
    bool converged = false;
    BigFloat prev_mag = 0;
    for (long j = 1; j <= 200; ++j) {
      const BigFloat term = to_bigfloat(bernoulli_2n(unsigned(j))) / fact * rising * kpow;
      const BigFloat mag = abs(term);
      if (j > 1 && mag > prev_mag) break;  // divergent regime reached
      tail += term;
      if (mag < target) {
        converged = true;
        break;
      }
      prev_mag = mag;
      rising *= BigFloat(s + 2 * j - 1) * (s + 2 * j);
      fact *= BigFloat(2 * j + 1) * (2 * j + 2);
      kpow *= invK * invK;
    }
    if (converged) return direct + tail;
  }
  throw QuadratureError("Euler-Maclaurin tail for zeta did not reach the requested accuracy");
}

struct ZetaCache {
  unsigned digits = 0;
  std::vector<BigFloat> values;
};

}  // namespace

const std::vector<BigFloat>& zeta2n_minus1(std::size_t count) {
  static ZetaCache cache;
  const unsigned digits = working_digits();
  if (cache.digits != digits) {
    cache.digits = digits;
    cache.values.clear();
  }
  if (cache.values.size() < count) {
    PrecisionGuard guard(digits + 10);
    const BigFloat target = working_eps() * 0.5;
    for (std::size_t n = cache.values.size() + 1; n <= count; ++n)
      cache.values.push_back(zeta_minus1_even(2 * long(n), target));
  }
  return cache.values;
}

namespace {

// sum_{k>=1} z^k / k^2 by direct summation; caller guarantees |z| <= 0.55.
BigComplex dilog_power_series(const BigComplex& z) {
  const BigFloat eps = working_eps();
  BigComplex acc = z;
  BigComplex zk = z;
  for (long k = 2; k < 4000; ++k) {
    zk = zk * z;
    const BigComplex term = zk / BigFloat(k * double(k));
    acc += term;
    if (abs(term) < eps * (abs(acc) + eps)) return acc;
  }
  throw QuadratureError("dilogarithm power series did not converge");
}

// Series in w = log(1-z), valid for |w| < 2*pi:
//   Li2(z) = -3w - w^2/4 + 2 pi i log((2 pi i + w)/(2 pi i - w))
//            + 2w sum_{n>=1} (-1)^n (zeta(2n)-1)/(2n+1) (w/2pi)^{2n}
BigComplex dilog_w_series(const BigComplex& z) {
  const BigFloat eps = working_eps();
  const BigFloat two_pi = 2 * pi_value();
  const BigComplex w = clog1p(-z);
  const BigComplex i2pi(BigFloat(0), two_pi);
  const BigComplex log_ratio = clog(i2pi + w) - clog(i2pi - w);
  BigComplex acc = BigComplex(-3) * w - w * w / 4 +
                   BigComplex(BigFloat(0), two_pi) * log_ratio;
  const BigComplex t = (w / two_pi) * (w / two_pi);
  BigComplex tn(BigFloat(1));
  BigComplex sum(BigFloat(0));
  int sign = -1;
  for (std::size_t n = 1; n < 500; ++n) {
    tn = tn * t;
    const auto& zt = zeta2n_minus1(n);
    const BigComplex term = tn * (zt[n - 1] / BigFloat(2.0 * double(n) + 1));
    sum += sign > 0 ? term : -term;
    sign = -sign;
    if (abs(term) < eps * (abs(sum) + BigFloat(1))) break;
  }
  return acc + BigComplex(2) * w * sum;
}

}  // namespace

BigComplex dilog(const BigComplex& z) {
  const BigFloat az = abs(z);
  if (az > 1 + 16 * working_eps())
    throw DomainError("dilog requires |z| <= 1");
  if (az == 0) return BigComplex(BigFloat(0));
  const BigComplex one_minus_z = BigComplex(1) - z;
  const BigFloat d1 = abs(one_minus_z);
  const BigFloat pi2_6 = pi_value() * pi_value() / 6;
  if (d1 * 10 < 1) {
    if (d1 == 0) return BigComplex(pi2_6);
    return BigComplex(pi2_6) - dilog_power_series(one_minus_z) -
           clog(one_minus_z) * clog(z);
  }
  if (2 * az <= 1) return dilog_power_series(z);
  return dilog_w_series(z);
}

namespace {

bool is_nonpositive_integer(const BigFloat& x) {
  return x <= 0 && x == boost::multiprecision::floor(x);
}

// Stirling's series at a point with Re(z) >= threshold; terms
// B_{2j} / ((2j)(2j-1) z^{2j-1}).
BigComplex stirling_log_gamma(const BigComplex& z) {
  const BigFloat eps = working_eps();
  const BigFloat half_log_2pi = log(2 * pi_value()) / 2;
  BigComplex acc = (z - BigComplex(BigFloat(1) / 2)) * clog(z) - z + BigComplex(half_log_2pi);
  const BigComplex inv2 = BigComplex(1) / (z * z);
  BigComplex zpow = BigComplex(1) / z;  // z^{-(2j-1)}
  BigFloat prev_mag = 0;
  for (long j = 1; j <= 400; ++j) {
    const BigComplex term =
        zpow * to_bigfloat(bernoulli_2n(unsigned(j)) / (BigRat(2 * j) * BigRat(2 * j - 1)));
    const BigFloat mag = abs(term);
    if (j > 1 && mag > prev_mag)
      throw QuadratureError("Stirling series diverged before reaching the target accuracy");
    acc += term;
    if (mag < eps * (abs(acc) + BigFloat(1))) return acc;
    prev_mag = mag;
    zpow = zpow * inv2;
  }
  throw QuadratureError("Stirling series did not converge");
}

BigFloat stirling_threshold() {
  return BigFloat(0.4) * (int(working_digits()) + 8);
}

}  // namespace

BigComplex log_gamma(const BigComplex& z) {
  if (z.im == 0) {
    if (is_nonpositive_integer(z.re))
      throw PoleError("log_gamma pole at a nonpositive integer");
    if (z.re < 0)
      throw DomainError("log_gamma on the negative real axis: use log_abs_gamma");
    // fall through: positive real axis handled by the shifted Stirling path
  }
  if (z.im < 0) return conj(log_gamma(conj(z)));
  const BigFloat threshold = stirling_threshold();
  BigComplex w = z;
  BigComplex shift(BigFloat(0));
  while (w.re < threshold) {
    shift += clog(w);
    w += BigComplex(1);
  }
  return stirling_log_gamma(w) - shift;
}

SignedLogGamma log_abs_gamma(const BigFloat& x) {
  SignedLogGamma out;
  if (is_nonpositive_integer(x)) {
    out.pole = true;
    out.sign = 0;
    out.log_abs = 0;
    return out;
  }
  if (x > 0) {
    out.log_abs = log_gamma(BigComplex(x)).re;
    out.sign = 1;
    return out;
  }
  // reflection: |Gamma(x)| = pi / (|sin(pi x)| * Gamma(1-x))
  const BigFloat s = sin_pi(x);
  out.sign = s > 0 ? 1 : -1;
  out.log_abs = log(pi_value()) - log(abs(s)) - log_gamma(BigComplex(1 - x)).re;
  return out;
}

BigComplex q_pochhammer_mod(const BigComplex& a, const BigComplex& q, int n) {
  if (n < 1) throw DomainError("q_pochhammer_mod requires n >= 1");
  const BigFloat slack = 16 * working_eps();
  if (abs(a) >= 1) throw DomainError("q_pochhammer_mod requires |a| < 1");
  if (abs(q) > 1 + slack) throw DomainError("q_pochhammer_mod requires |q| <= 1");
  BigComplex log_acc(BigFloat(0));
  BigComplex qk(BigFloat(1));
  for (int k = 1; k <= n - 1; ++k) {
    qk = qk * q;
    const BigComplex w = BigComplex(1) - a * qk;
    if (w.im == 0 && w.re <= 0)
      throw BranchError("q_pochhammer_mod factor on the branch cut");
    log_acc += clog(w) * (BigFloat(k) / n);
  }
  return cexp(log_acc);
}

namespace {

// prod_{k=1}^{m-1} (1 - e^{2 pi i (s + k n)/m})^{k/m}, with each factor
// computed as -expm1(2 pi i (s+kn)/m) so that factors stay fully accurate
// when (s+kn)/m is exponentially close to an integer (lifted real points).
BigComplex pochhammer_block(const BigComplex& s, int span, int step, int m) {
  BigComplex log_acc(BigFloat(0));
  for (int k = 1; k <= span - 1; ++k) {
    const BigComplex arg = (s + BigComplex(k * step)) / m;
    const BigComplex factor = -cexpm1_2pii(arg);
    log_acc += clog(factor) * (BigFloat(k) / m);
  }
  return cexp(log_acc);
}

}  // namespace

BigComplex h_mn(int m, int n, const BigComplex& s) {
  if (m < 1 || n < 1) throw DomainError("h_mn requires m, n >= 1");
  if (std::gcd(m, n) != 1) throw DomainError("h_mn requires coprime m, n");
  if (!(s.im > 0))
    throw DomainError("h_mn requires Im(s) > 0; lift real arguments first");
  const BigFloat two_pi = 2 * pi_value();
  const BigComplex z = cexp_2pii(s);
  const BigComplex one_minus_z = -cexpm1_2pii(s);
  const BigComplex li = dilog(z);
  // -Li2(z) / (2 pi i m n) = i Li2(z) / (2 pi m n)
  const BigComplex pref =
      cexp(BigComplex(-li.im, li.re) / (two_pi * m * n));
  const BigComplex power = cpow(one_minus_z, BigComplex(1) - s / (m * n));
  const BigComplex p1 = pochhammer_block(s, m, n, m);
  const BigComplex p2 = pochhammer_block(s, n, m, n);
  return pref * power / (p1 * p2);
}

}  // namespace stex
