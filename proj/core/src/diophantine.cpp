#include "stex/diophantine.hpp"

#include <gmp.h>

#include <algorithm>

#include "stex/errors.hpp"

namespace stex {

namespace {

BigInt rat_floor(const BigRat& r) {
  const BigInt n = numerator(r), d = denominator(r);  // d > 0 canonical
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

// distance to the nearest integer, exact
BigRat rat_dist(const BigRat& r) {
  const BigRat f = r - rat_floor(r);
  return std::min(f, BigRat(1) - f);
}

BigInt factorial_exact(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.backend().data(), n);
  return f;
}

BigRat rat_pow(BigRat base, unsigned long e) {
  BigRat r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

void push_convergent(ContinuedFraction& cf, const BigInt& a) {
  const std::size_t n = cf.convergents.size();
  if (n == 0) {
    cf.convergents.emplace_back(a, BigInt(1));
    return;
  }
  const BigInt p1 = cf.convergents[n - 1].first;
  const BigInt q1 = cf.convergents[n - 1].second;
  const BigInt p0 = n >= 2 ? cf.convergents[n - 2].first : BigInt(1);
  const BigInt q0 = n >= 2 ? cf.convergents[n - 2].second : BigInt(0);
  cf.convergents.emplace_back(a * p1 + p0, a * q1 + q0);
}

// growth test shared by L and L_tilde: exponent(q) is ln of the threshold
template <typename Exponent>
MembershipVerdict growth_scan(const ContinuedFraction& cf, ArithmeticSet set,
                              const BigFloat& b, const BigFloat& eps,
                              Exponent&& log_threshold) {
  if (!(b > 1)) throw DomainError("growth tests need b > 1");
  if (cf.convergents.size() < 2)
    throw DomainError("growth tests need at least two convergents");
  MembershipVerdict v;
  v.set = set;
  v.b = b;
  v.eps = eps;
  for (std::size_t n = 1; n + 1 <= cf.quotients.size(); ++n) {
    const BigFloat la = log(to_bigfloat(cf.quotients[n]));  // ln a_{n+1}
    const BigFloat qn = to_bigfloat(cf.convergents[n].second);
    if (la > log_threshold(qn)) v.witness.push_back(BigInt(n));
  }
  v.verdict = v.witness.empty() ? Verdict::no_witness_up_to_bound
                                : Verdict::witnessed_yes;
  return v;
}

}  // namespace

BigRat cf_value(const ContinuedFraction& cf) {
  if (cf.convergents.empty()) throw DomainError("empty continued fraction");
  const auto& [p, q] = cf.convergents.back();
  return BigRat(p, q);
}

std::pair<BigRat, BigRat> cf_enclosure(const ContinuedFraction& cf) {
  if (cf.convergents.empty()) throw DomainError("empty continued fraction");
  if (cf.convergents.size() == 1) {
    const BigRat v(cf.convergents[0].first, 1);
    return {v, v + 1};
  }
  const auto& [pN, qN] = cf.convergents.back();
  const auto& [pM, qM] = cf.convergents[cf.convergents.size() - 2];
  BigRat a(pN, qN), b(pM, qM);
  if (a > b) std::swap(a, b);
  return {a, b};
}

bool cf_determinant_ok(const ContinuedFraction& cf) {
  for (std::size_t n = 1; n < cf.convergents.size(); ++n) {
    const BigInt det = cf.convergents[n].first * cf.convergents[n - 1].second -
                       cf.convergents[n - 1].first * cf.convergents[n].second;
    if (det != (n % 2 ? BigInt(1) : BigInt(-1))) return false;
  }
  return true;
}

ContinuedFraction cf_shift(const ContinuedFraction& cf, const BigInt& z) {
  ContinuedFraction out = cf;
  out.a0 += z;
  for (auto& [p, q] : out.convergents) p += z * q;
  return out;
}

ContinuedFraction cf_expand(const BigFloat& x, int depth) {
  if (depth < 1) throw DomainError("cf_expand needs depth >= 1");
  const BigRat xr = to_rational(x);
  BigRat radius = to_rational(
      pow(BigFloat(10), -static_cast<int>(working_digits()) + 2));
  if (abs(xr) > 1) radius *= abs(xr);
  BigRat lo = xr - radius, hi = xr + radius;

  ContinuedFraction cf;
  for (int k = 0; k <= depth; ++k) {
    const BigInt flo = rat_floor(lo), fhi = rat_floor(hi);
    if (flo != fhi) {
      cf.precision_exhausted = true;
      break;
    }
    if (k == 0) {
      cf.a0 = flo;
    } else {
      cf.quotients.push_back(flo);
    }
    push_convergent(cf, flo);
    if (k == depth) break;
    const BigRat frl = lo - flo, frh = hi - flo;
    if (frl == 0) {  // endpoint hit an exact truncation: tail undetermined
      cf.precision_exhausted = true;
      break;
    }
    lo = BigRat(1) / frh;
    hi = BigRat(1) / frl;
  }
  if (cf.convergents.empty())
    throw DomainError("input precision does not determine even a0");
  return cf;
}

ContinuedFraction cf_expand(const BigRat& x, int depth) {
  if (depth < 1) throw DomainError("cf_expand needs depth >= 1");
  std::vector<BigInt> qs;  // full expansion including a0
  BigRat r = x;
  for (;;) {
    const BigInt f = rat_floor(r);
    qs.push_back(f);
    const BigRat frac = r - f;
    if (frac == 0) break;
    r = BigRat(1) / frac;
  }
  // terminating form ending in 1: [..., a] -> [..., a-1, 1] (a >= 2 always
  // holds for the Euclidean tail of a non-integer)
  if (qs.size() > 1) {
    BigInt last = qs.back();
    qs.back() = last - 1;
    qs.push_back(BigInt(1));
  }
  ContinuedFraction cf;
  cf.a0 = qs[0];
  push_convergent(cf, qs[0]);
  for (std::size_t i = 1; i < qs.size() && i <= static_cast<std::size_t>(depth);
       ++i) {
    cf.quotients.push_back(qs[i]);
    push_convergent(cf, qs[i]);
  }
  return cf;
}

MembershipVerdict test_L(const ContinuedFraction& cf, const BigFloat& b) {
  const BigFloat lb = log(b);
  return growth_scan(cf, ArithmeticSet::L, b, BigFloat(0),
                     [&](const BigFloat& qn) { return qn * lb; });
}

MembershipVerdict test_L_tilde(const ContinuedFraction& cf, const BigFloat& b,
                               const BigFloat& eps) {
  if (!(eps > 0)) throw DomainError("test_L_tilde needs eps > 0");
  const BigFloat lb = log(b);
  return growth_scan(cf, ArithmeticSet::L_tilde, b, eps,
                     [&](const BigFloat& qn) {
                       return qn * pow(log(qn), 1 + eps) * lb;
                     });
}

ContinuedFraction construct_L_tilde(const BigFloat& b, const BigFloat& eps,
                                    const LtConstructConfig& cfg) {
  if (!(b > 1)) throw DomainError("construct_L_tilde needs b > 1");
  if (!(eps > 0)) throw DomainError("construct_L_tilde needs eps > 0");
  if (cfg.levels < 2) throw DomainError("construct_L_tilde needs levels >= 2");

  ContinuedFraction cf;
  cf.a0 = 0;
  cf.constructed = true;
  push_convergent(cf, BigInt(0));
  cf.quotients.push_back(BigInt(2));
  push_convergent(cf, BigInt(2));

  const BigFloat log2b = log(b) / log(BigFloat(2));
  for (int n = 1; n < cfg.levels; ++n) {
    const BigFloat qn = to_bigfloat(cf.convergents[n].second);
    const BigFloat expo = qn * pow(log(qn), 1 + eps);  // in powers of b
    if (expo * log2b > cfg.max_quotient_bits)
      throw ResourceError("constructed quotient exceeds the big-integer budget");
    // tiny upward bump so the strict inequality stays certifiable at
    // working precision even when the quotient is astronomically large
    const BigFloat v = exp(expo * log(b)) * (1 + BigFloat("1e-28"));
    BigInt a = ceil(v).convert_to<BigInt>() + 1;
    if (n + 1 == cfg.levels && cfg.min_last_quotient > a)
      a = cfg.min_last_quotient;
    cf.quotients.push_back(a);
    push_convergent(cf, a);
  }
  return cf;
}

std::vector<std::pair<long, BigFloat>> set_C(const StableParams& p,
                                             long search_bound) {
  std::vector<std::pair<long, BigFloat>> out;
  if (p.alpha.exact_rational) {
    const long m = p.alpha.num, n = p.alpha.den;
    // smallest positive l with {l n / m} = j/m, i.e. l = j n^{-1} mod m
    long inv = 0;
    for (long c = 1; c < m; ++c)
      if (c * n % m == 1) {
        inv = c;
        break;
      }
    for (long j = 1; j < m; ++j) {
      long l = j * inv % m;
      if (l == 0) l = m;
      out.emplace_back(l, to_bigfloat(BigRat(j, m)));
    }
    return out;  // already sorted: values are j/m, j ascending
  }
  for (long l = 1; l <= search_bound; ++l) {
    out.emplace_back(l, frac(l / p.alpha.value));
    out.emplace_back(-l, frac(-l / p.alpha.value));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

MembershipVerdict test_B_alpha(const BigFloat& alpha, const BigFloat& rho,
                               long n_max) {
  if (n_max < 2) throw DomainError("test_B_alpha needs n_max >= 2");
  MembershipVerdict v;
  v.set = ArithmeticSet::B_alpha;
  for (long n = 1; n <= n_max; ++n) {
    const BigFloat d = dist_to_int(alpha * rho + n * alpha);
    const BigFloat nn(n);
    const BigFloat threshold = pow(nn, -log(log(1 + nn)));
    if (d < threshold) v.witness.push_back(BigInt(n));
  }
  v.verdict = v.witness.empty() ? Verdict::no_witness_up_to_bound
                                : Verdict::witnessed_yes;
  return v;
}

WitnessResult divergence_witness(const ContinuedFraction& alpha_cf,
                                 const BigFloat& rho, const BigFloat& x,
                                 const BigInt& q) {
  if (!alpha_cf.constructed)
    throw DomainError(
        "divergence witness needs an irrational-by-construction value");
  if (!(rho > 0) || !(rho < 1))
    throw DomainError("divergence witness needs rho in (0,1)");
  if (!(x > 0)) throw DomainError("divergence witness needs x > 0");

  const auto [lo, hi] = cf_enclosure(alpha_cf);
  if (!(lo > 1) || !(hi < 2))
    throw DomainError("divergence witness needs alpha in (1,2)");

  const BigInt* p_at_q = nullptr;
  for (const auto& [pn, qn] : alpha_cf.convergents)
    if (qn == q) {
      p_at_q = &pn;
      break;
    }
  if (p_at_q == nullptr)
    throw DomainError("q must be one of the convergent denominators");
  if (q > 20000)
    throw ResourceError("witness q beyond the exact-arithmetic budget");
  const unsigned long qu = q.convert_to<unsigned long>();

  const BigRat rr = to_rational(rho);
  // prod_j ||alpha (rho+j-1)||, each factor bounded below over the
  // enclosure; an integer inside any factor interval collapses it to 0
  BigRat prod(1);
  for (unsigned long j = 1; j <= qu; ++j) {
    const BigRat rj = rr + BigRat(static_cast<long>(j) - 1);
    const BigRat tlo = lo * rj, thi = hi * rj;
    if (rat_floor(tlo) != rat_floor(thi)) {
      prod = 0;
      break;
    }
    prod *= std::min(rat_dist(tlo), rat_dist(thi));
  }

  // ||alpha q|| <= max over the enclosure endpoints (linear in alpha)
  const BigRat qr(q), pr(*p_at_q);
  const BigRat e1 = abs(lo * qr - pr), e2 = abs(hi * qr - pr);
  const BigRat norm_hi = std::max(e1, e2);

  const BigRat exact = rat_pow(to_rational(x), qu) * prod /
                       (BigRat(factorial_exact(2 * qu)) * norm_hi);

  // transcendental factor sin(pi rho)/pi^2, rounded down
  const BigFloat margin("1e-30");
  const BigFloat trans = sin_pi(rho) * (1 - margin) /
                         (pi_value() * pi_value() * (1 + margin));

  WitnessResult w;
  w.q = q;
  w.lower_bound = trans * to_bigfloat(exact);
  w.exceeds_one = w.lower_bound > 1;
  return w;
}

std::optional<std::pair<long, long>> doney_search(const StableParams& p,
                                                  long k_bound, long l_bound,
                                                  const BigFloat& tol) {
  for (long l = 1; l <= l_bound; ++l) {
    const BigFloat t = l / p.alpha.value - p.rho;
    const BigFloat k = round(t);
    if (abs(k) > k_bound) continue;
    if (abs(t - k) <= tol) return std::make_pair(k.convert_to<long>(), l);
  }
  return std::nullopt;
}

InhomApprox inhom_approx(const Alpha& alpha, const BigFloat& rho,
                         long q_bound) {
  if (alpha.exact_rational)
    throw DomainError("inhom_approx needs an irrational-as-stored alpha");
  if (q_bound < 0) throw DomainError("inhom_approx needs q_bound >= 0");
  InhomApprox best;
  best.l = 0;
  best.approx_rho = 0;
  best.error = abs(rho);
  for (long m = 1; m <= q_bound; ++m) {
    for (const long l : {m, -m}) {
      const BigFloat v = frac(l / alpha.value);
      const BigFloat err = abs(rho - v);
      if (err < best.error) {
        best.l = l;
        best.approx_rho = v;
        best.error = err;
      }
    }
  }
  return best;
}

}  // namespace stex
