#include "stex/oracle_mc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "stex/errors.hpp"

namespace stex {

namespace {

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;  // 2^-53

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// uniform draws on [0, 1 - 2^-53]; the mirrored variant reflects the
// 53-bit lattice so antithetic partners never produce exactly 1
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, std::uint64_t stream, bool mirror)
      : eng_(splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ull)),
        mirror_(mirror) {}

  double next() {
    std::uint64_t k = eng_() >> 11;
    if (mirror_) k = 9007199254740991ull - k;  // 2^53 - 1 - k
    return static_cast<double>(k) * kTwoPow53Inv;
  }

 private:
  std::mt19937_64 eng_;
  bool mirror_;
};

struct CmsConstants {
  double alpha, b;            // b = pi (rho - 1/2)
  double inv_alpha, exp_tail;  // (1 - alpha)/alpha
};

CmsConstants cms_constants(const StableParams& p) {
  CmsConstants c;
  c.alpha = p.alpha.value.convert_to<double>();
  c.b = M_PI * (p.rho.convert_to<double>() - 0.5);
  c.inv_alpha = 1.0 / c.alpha;
  c.exp_tail = (1.0 - c.alpha) / c.alpha;
  return c;
}

double cms_draw(const CmsConstants& c, UniformStream& u) {
  const double v = M_PI * (u.next() - 0.5);          // uniform(-pi/2, pi/2)
  const double w = -std::log(1.0 - u.next());        // exponential(1)
  const double a_vb = c.alpha * (v + c.b);
  return std::sin(a_vb) * std::pow(std::cos(v), -c.inv_alpha) *
         std::pow(std::cos(v - a_vb) / w, c.exp_tail);
}

void validate(const McConfig& cfg) {
  if (cfg.paths < 1) throw DomainError("McConfig.paths must be >= 1");
  if (cfg.grid_steps < 2) throw DomainError("McConfig.grid_steps must be >= 2");
}

// one discretized-supremum path; t is fixed per call
double sup_path(const CmsConstants& c, UniformStream& u, double t,
                long steps) {
  const double scale = std::pow(t / static_cast<double>(steps), c.inv_alpha);
  double walk = 0, sup = 0;  // sup includes the time-0 value
  for (long i = 0; i < steps; ++i) {
    walk += scale * cms_draw(c, u);
    if (walk > sup) sup = walk;
  }
  return sup;
}

}  // namespace

std::vector<double> sample_stable(const StableParams& p, long n,
                                  std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_stable needs n >= 1");
  const CmsConstants c = cms_constants(p);
  UniformStream u(seed, 0, false);
  std::vector<double> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(cms_draw(c, u));
  return out;
}

std::vector<double> sample_sup(const StableParams& p, const McConfig& cfg,
                               double t) {
  validate(cfg);
  if (!(t > 0)) throw DomainError("sample_sup needs t > 0");
  const CmsConstants c = cms_constants(p);
  std::vector<double> out;
  out.reserve(cfg.paths);
  for (long path = 0; path < cfg.paths; ++path) {
    const std::uint64_t stream = cfg.antithetic ? path / 2 : path;
    const bool mirror = cfg.antithetic && (path % 2 == 1);
    UniformStream u(cfg.seed, stream, mirror);
    out.push_back(sup_path(c, u, t, cfg.grid_steps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sample_sup_exp_time(const StableParams& p,
                                        const McConfig& cfg) {
  validate(cfg);
  const CmsConstants c = cms_constants(p);
  std::vector<double> out;
  out.reserve(cfg.paths);
  for (long path = 0; path < cfg.paths; ++path) {
    const std::uint64_t stream = cfg.antithetic ? path / 2 : path;
    const bool mirror = cfg.antithetic && (path % 2 == 1);
    UniformStream u(cfg.seed, stream, mirror);
    const double t = -std::log(1.0 - u.next());  // e(1) horizon
    out.push_back(t > 0 ? sup_path(c, u, t, cfg.grid_steps) : 0.0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double positive_fraction(const std::vector<double>& xs) {
  if (xs.empty()) throw DomainError("positive_fraction needs samples");
  long n = 0;
  for (const double x : xs) n += x > 0;
  return static_cast<double>(n) / static_cast<double>(xs.size());
}

std::pair<double, double> laplace_estimate(const std::vector<double>& xs,
                                           double z) {
  if (xs.empty()) throw DomainError("laplace_estimate needs samples");
  double sum = 0, sum2 = 0;
  for (const double x : xs) {
    const double e = std::exp(-z * x);
    sum += e;
    sum2 += e * e;
  }
  const double n = static_cast<double>(xs.size());
  const double mean = sum / n;
  const double var = std::max(sum2 / n - mean * mean, 0.0);
  return {mean, std::sqrt(var / n)};
}

double ks_distance(const std::vector<double>& sorted_samples,
                   const std::vector<double>& cdf_at_samples) {
  if (sorted_samples.size() != cdf_at_samples.size() || sorted_samples.empty())
    throw DomainError("ks_distance needs matching nonempty vectors");
  const double n = static_cast<double>(sorted_samples.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double f = cdf_at_samples[i];
    d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  return d;
}

double ks_distance_two_sample(const std::vector<double>& a_sorted,
                              const std::vector<double>& b_sorted) {
  if (a_sorted.empty() || b_sorted.empty())
    throw DomainError("ks_distance_two_sample needs nonempty samples");
  const double n1 = static_cast<double>(a_sorted.size());
  const double n2 = static_cast<double>(b_sorted.size());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a_sorted.size() || j < b_sorted.size()) {
    const double v = (j >= b_sorted.size() ||
                      (i < a_sorted.size() && a_sorted[i] <= b_sorted[j]))
                         ? a_sorted[i]
                         : b_sorted[j];
    while (i < a_sorted.size() && a_sorted[i] <= v) ++i;
    while (j < b_sorted.size() && b_sorted[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n1 -
                             static_cast<double>(j) / n2));
  }
  return d;
}

}  // namespace stex
