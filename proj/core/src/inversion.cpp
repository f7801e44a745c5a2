#include "stex/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "stex/errors.hpp"

namespace stex {

namespace {

void validate_cfg(const QuadConfig& cfg) {
  if (!(cfg.u_max > 0)) throw DomainError("QuadConfig.u_max must be > 0");
  if (cfg.panels < 8) throw DomainError("QuadConfig.panels must be >= 8");
  if (!(cfg.refinement_tolerance > 0))
    throw DomainError("QuadConfig.refinement_tolerance must be > 0");
  if (cfg.filon_degree != 2)
    throw DomainError("only the quadratic (classical) Filon rule is implemented");
}

// shared M(1+iu) samples: 2*panels+1 uniform points on [0, u_max]
struct FilonPlan {
  int panels = 0;
  BigFloat u_max;
  BigFloat h;  // half-panel width = sample step
  std::vector<BigComplex> ms;
};

BigComplex sample_at(const StableParams& p, const BigFloat& u) {
  if (u == 0) return BigComplex(BigFloat(1));  // M(1) = 1 exactly
  return mellin_rational(p, BigComplex{BigFloat(1), u}).value;
}

FilonPlan build_plan(const StableParams& p, const BigFloat& u_max, int panels) {
  FilonPlan plan;
  plan.panels = panels;
  plan.u_max = u_max;
  plan.h = u_max / (2 * panels);
  plan.ms.resize(2 * panels + 1);
  for (int j = 0; j <= 2 * panels; ++j) plan.ms[j] = sample_at(p, j * plan.h);
  return plan;
}

// double the panel count, reusing every existing sample at the even indices
FilonPlan refine_plan(const StableParams& p, const FilonPlan& old) {
  FilonPlan plan;
  plan.panels = 2 * old.panels;
  plan.u_max = old.u_max;
  plan.h = old.h / 2;
  plan.ms.resize(2 * plan.panels + 1);
  for (int j = 0; j < static_cast<int>(old.ms.size()); ++j)
    plan.ms[2 * j] = old.ms[j];
  for (int j = 1; j < static_cast<int>(plan.ms.size()); j += 2)
    plan.ms[j] = sample_at(p, j * plan.h);
  return plan;
}

// moments of 1, t, t^2 against e^{i mu t} on [-1,1]; I0 and I2 are real,
// I1 is purely imaginary (its imaginary part is returned)
struct OscMoments {
  BigFloat i0, i1_im, i2;
};

OscMoments osc_moments(const BigFloat& mu) {
  OscMoments m;
  if (mu == 0) {
    m.i0 = 2;
    m.i1_im = 0;
    m.i2 = BigFloat(2) / 3;
  } else if (abs(mu) < BigFloat(1) / 2) {
    // Taylor in mu^2; closed forms cancel heavily for small mu
    const BigFloat mu2 = mu * mu;
    const BigFloat eps = working_eps();
    BigFloat t0(1), t2 = BigFloat(1) / 3;  // running |terms| sans signs
    m.i0 = 1;
    m.i1_im = 0;
    m.i2 = t2;
    BigFloat pw(1);  // mu^{2k} / (2k+1)!
    for (int k = 1; k < 200; ++k) {
      pw *= mu2 / (2 * k * (2 * k + 1));
      const int sign = k % 2 ? -1 : 1;
      m.i0 += sign * pw;
      m.i1_im += -sign * 2 * k * pw / mu;  // odd series: mu^{2k-1} terms
      m.i2 += sign * pw * (2 * k + 1) / (2 * k + 3);
      if (pw < eps) break;
    }
    m.i0 *= 2;
    m.i1_im *= 2;
    m.i2 *= 2;
  } else {
    const BigFloat s = sin(mu), c = cos(mu);
    m.i0 = 2 * s / mu;
    m.i1_im = 2 * (s / (mu * mu) - c / mu);
    m.i2 = 2 * s / mu + 4 * c / (mu * mu) - 4 * s / (mu * mu * mu);
  }
  return m;
}

// p(x) = Re int_0^{u_max} M(1+iu) e^{i theta u} du / (pi x),  theta = -ln x
BigFloat filon_eval(const FilonPlan& plan, const BigFloat& x) {
  const BigFloat theta = -log(x);
  const BigFloat mu = theta * plan.h;
  const OscMoments mom = osc_moments(mu);
  // phase e^{i theta u_mid}, advanced by e^{2 i theta h} per panel
  BigComplex phase{cos(mu), sin(mu)};
  const BigComplex rot = phase * phase;
  BigComplex total{BigFloat(0)};
  for (int k = 0; k < plan.panels; ++k) {
    const BigComplex& f0 = plan.ms[2 * k];
    const BigComplex& f1 = plan.ms[2 * k + 1];
    const BigComplex& f2 = plan.ms[2 * k + 2];
    const BigComplex c1 = (f2 - f0) / 2;
    const BigComplex c2 = (f0 - 2 * f1 + f2) / 2;
    // c0*I0 + c1*I1 + c2*I2 with I1 = i*i1_im
    BigComplex inner = f1 * mom.i0 + c2 * mom.i2;
    inner += BigComplex{-c1.im * mom.i1_im, c1.re * mom.i1_im};
    total += phase * inner;
    if (k + 1 < plan.panels) phase = phase * rot;
  }
  return total.re * plan.h / (pi_value() * x);
}

std::vector<BigFloat> eval_grid(const FilonPlan& plan,
                                const std::vector<BigFloat>& xs) {
  std::vector<BigFloat> out;
  out.reserve(xs.size());
  for (const BigFloat& x : xs) out.push_back(filon_eval(plan, x));
  return out;
}

struct ConvergedEval {
  FilonPlan plan;
  std::vector<BigFloat> ps;
  std::vector<BigFloat> deltas;  // change over the last panel doubling
};

ConvergedEval converge(const StableParams& p, const std::vector<BigFloat>& xs,
                       const QuadConfig& cfg) {
  validate_cfg(cfg);
  if (!p.alpha.exact_rational)
    throw DomainError("Mellin inversion needs exactly rational alpha");
  for (const BigFloat& x : xs)
    if (!(x > 0)) throw DomainError("inversion grid points must be > 0");

  ConvergedEval ce;
  ce.plan = build_plan(p, cfg.u_max, cfg.panels);
  ce.ps = eval_grid(ce.plan, xs);
  for (int iter = 0; iter < 14; ++iter) {
    ce.plan = refine_plan(p, ce.plan);
    std::vector<BigFloat> next = eval_grid(ce.plan, xs);
    BigFloat worst = 0;
    ce.deltas.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ce.deltas[i] = abs(next[i] - ce.ps[i]);
      worst = std::max(worst, ce.deltas[i]);
    }
    ce.ps = std::move(next);
    if (worst < cfg.refinement_tolerance) return ce;
  }
  throw QuadratureError("Filon panel doubling did not converge");
}

// double-precision mirror of the Filon evaluation for dense CDF grids.
// The u_max truncation already limits the density to ~1e-10 absolute, so
// double roundoff (~1e-13 over 10^4 panels) is invisible; the panel
// coefficients are x-independent and precomputed once.
struct DensePlan {
  int panels = 0;
  double h = 0;
  std::vector<std::complex<double>> c0, c1, c2;
};

DensePlan densify(const FilonPlan& plan) {
  DensePlan d;
  d.panels = plan.panels;
  d.h = plan.h.convert_to<double>();
  d.c0.reserve(plan.panels);
  d.c1.reserve(plan.panels);
  d.c2.reserve(plan.panels);
  auto cd = [](const BigComplex& z) {
    return std::complex<double>(z.re.convert_to<double>(),
                                z.im.convert_to<double>());
  };
  for (int k = 0; k < plan.panels; ++k) {
    const std::complex<double> f0 = cd(plan.ms[2 * k]);
    const std::complex<double> f1 = cd(plan.ms[2 * k + 1]);
    const std::complex<double> f2 = cd(plan.ms[2 * k + 2]);
    d.c0.push_back(f1);
    d.c1.push_back((f2 - f0) / 2.0);
    d.c2.push_back((f0 - 2.0 * f1 + f2) / 2.0);
  }
  return d;
}

double filon_eval(const DensePlan& plan, double x) {
  const double theta = -std::log(x);
  const double mu = theta * plan.h;
  double i0, i1_im, i2;
  if (std::fabs(mu) < 0.5) {
    const double mu2 = mu * mu;
    i0 = 1;
    i1_im = 0;
    i2 = 1.0 / 3;
    double pw = 1;
    for (int k = 1; k < 40; ++k) {
      pw *= mu2 / (2 * k * (2 * k + 1));
      const double sg = k % 2 ? -1 : 1;
      i0 += sg * pw;
      if (mu != 0) i1_im += -sg * 2 * k * pw / mu;
      i2 += sg * pw * (2 * k + 1) / (2 * k + 3);
      if (pw < 1e-18) break;
    }
    i0 *= 2;
    i1_im *= 2;
    i2 *= 2;
  } else {
    const double s = std::sin(mu), c = std::cos(mu);
    i0 = 2 * s / mu;
    i1_im = 2 * (s / (mu * mu) - c / mu);
    i2 = 2 * s / mu + 4 * c / (mu * mu) - 4 * s / (mu * mu * mu);
  }
  std::complex<double> phase(std::cos(mu), std::sin(mu));
  const std::complex<double> rot = phase * phase;
  const std::complex<double> i1(0, i1_im);
  std::complex<double> total = 0;
  for (int k = 0; k < plan.panels; ++k) {
    total += phase * (plan.c0[k] * i0 + plan.c1[k] * i1 + plan.c2[k] * i2);
    phase *= rot;
  }
  return total.real() * plan.h / (M_PI * x);
}

std::vector<BigFloat> probe_points(const DistributionSplit& split) {
  std::vector<BigFloat> probe;
  const int n = 9;
  const BigFloat ratio = pow(split.x_tail / split.x_head, BigFloat(1) / (n - 1));
  BigFloat x = split.x_head;
  for (int i = 0; i < n; ++i, x *= ratio) probe.push_back(x);
  return probe;
}

// coefficient-table truncations that exist even at rational alpha = m/n
// (the j-th denominator sine vanishes first at j = m resp. j = n)
std::pair<int, int> capped_orders(const StableParams& p, int want_m, int want_n) {
  int cm = want_m, cn = want_n;
  if (p.alpha.exact_rational) {
    cm = std::min<long>(cm, p.alpha.num - 1);
    cn = std::min<long>(cn, p.alpha.den - 1);
  }
  return {std::max(cm, 0), std::max(cn, 1)};
}

struct MassPieces {
  BigFloat head, tail;
  std::vector<CoeffTable> tables;  // [0] = a (head), [1] = b (tail)
  std::vector<BigFloat> grid;      // dense middle grid
  std::vector<BigFloat> dens;      // p on the grid
  std::vector<BigFloat> cum;       // cumulative trapezoid from x_head
};

MassPieces assemble(const StableParams& p, const QuadConfig& cfg,
                    const DistributionSplit& split) {
  if (!(split.x_head > 0) || !(split.x_tail > split.x_head))
    throw DomainError("DistributionSplit needs 0 < x_head < x_tail");
  if (split.nodes < 16) throw DomainError("DistributionSplit.nodes too small");
  const auto [hm, hn] = capped_orders(p, split.head_m, split.head_n);

  MassPieces mp;
  mp.tables.push_back(build_coeff_table(p, CoeffKind::a, hm, hn));
  mp.tables.push_back(build_coeff_table(p, CoeffKind::b, hm, hn));
  mp.head = mass_from_zero(mp.tables[0], split.x_head);
  mp.tail = mass_to_infinity(mp.tables[1], split.x_tail);

  const ConvergedEval ce = converge(p, probe_points(split), cfg);
  const DensePlan dp = densify(ce.plan);
  const int n = split.nodes;
  const BigFloat ratio = pow(split.x_tail / split.x_head, BigFloat(1) / (n - 1));
  mp.grid.reserve(n);
  mp.dens.reserve(n);
  BigFloat x = split.x_head;
  for (int i = 0; i < n; ++i, x *= ratio) mp.grid.push_back(x);
  mp.grid.back() = split.x_tail;
  for (int i = 0; i < n; ++i)
    mp.dens.push_back(BigFloat(filon_eval(dp, mp.grid[i].convert_to<double>())));
  mp.cum.resize(n);
  mp.cum[0] = 0;
  for (int i = 1; i < n; ++i)
    mp.cum[i] = mp.cum[i - 1] + (mp.grid[i] - mp.grid[i - 1]) *
                                    (mp.dens[i] + mp.dens[i - 1]) / 2;
  return mp;
}

}  // namespace

std::vector<MellinSample> mellin_samples(const StableParams& p,
                                         const QuadConfig& cfg) {
  validate_cfg(cfg);
  if (!p.alpha.exact_rational)
    throw DomainError("Mellin sampling needs exactly rational alpha");
  const BigFloat step = cfg.u_max / (2 * cfg.panels);
  std::vector<MellinSample> out;
  out.reserve(2 * cfg.panels + 1);
  for (int j = 0; j <= 2 * cfg.panels; ++j) {
    const BigFloat u = j * step;
    out.push_back({u, sample_at(p, u)});
  }
  return out;
}

DensityCurve invert_mellin(const StableParams& p,
                           const std::vector<BigFloat>& xs,
                           const QuadConfig& cfg) {
  ConvergedEval ce = converge(p, xs, cfg);
  DensityCurve curve;
  curve.xs = xs;
  curve.ps = std::move(ce.ps);
  curve.diagnostics = std::move(ce.deltas);
  curve.method = CurveMethod::mellin_inversion;
  curve.u_max = cfg.u_max;
  curve.panels = ce.plan.panels;
  return curve;
}

BigFloat inversion_total_mass(const StableParams& p, const QuadConfig& cfg,
                              const DistributionSplit& split) {
  const MassPieces mp = assemble(p, cfg, split);
  return mp.head + mp.cum.back() + mp.tail;
}

std::vector<BigFloat> inversion_cdf(const StableParams& p,
                                    const std::vector<BigFloat>& xs,
                                    const QuadConfig& cfg,
                                    const DistributionSplit& split) {
  const MassPieces mp = assemble(p, cfg, split);

  std::vector<BigFloat> out;
  out.reserve(xs.size());
  for (const BigFloat& x : xs) {
    BigFloat f;
    if (!(x > 0)) {
      f = 0;
    } else if (x <= split.x_head) {
      f = mass_from_zero(mp.tables[0], x);
    } else if (x >= split.x_tail) {
      f = 1 - mass_to_infinity(mp.tables[1], x);
    } else {
      // locate the geometric-grid segment, interpolate the density there,
      // and close the cumulative with a partial trapezoid
      const auto it =
          std::upper_bound(mp.grid.begin(), mp.grid.end(), x) - 1;
      const std::size_t i = it - mp.grid.begin();
      const std::size_t j = std::min(i + 1, mp.grid.size() - 1);
      BigFloat px = mp.dens[i];
      if (j > i) {
        const BigFloat t = (x - mp.grid[i]) / (mp.grid[j] - mp.grid[i]);
        px += t * (mp.dens[j] - mp.dens[i]);
      }
      f = mp.head + mp.cum[i] + (x - mp.grid[i]) * (mp.dens[i] + px) / 2;
    }
    if (f < 0) f = 0;
    if (f > 1) f = 1;
    out.push_back(f);
  }
  return out;
}

}  // namespace stex
