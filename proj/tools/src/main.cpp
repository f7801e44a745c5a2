#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stex/alpha_expr.hpp"
#include "stex/diophantine.hpp"
#include "stex/errors.hpp"
#include "stex/inversion.hpp"
#include "stex/io.hpp"
#include "stex/mellin.hpp"
#include "stex/oracle_mc.hpp"
#include "stex/series.hpp"

namespace {

using namespace stex;

int g_status = 0;  // validate subcommands set 1 on a tolerance breach

// pinned reference bounds for `validate`; frozen from the first reference
// runs and used verbatim by the acceptance suite
// measured max gap 1.06957e-4, dominated by x=4.1 where the asymptotic
// truncation (15,15) is already optimal: deeper truncations diverge
constexpr const char* kFig3Bound = "1.1e-4";
// measured 0.00186339 at the default seed; bias-dominated, so deterministic
constexpr const char* kMcKsBound = "0.002";

int default_precision() {
  if (const char* e = std::getenv("STABLE_EXTREMA_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(e, &end, 10);
    if (end && *end == '\0' && v >= 10 && v <= 10000) return static_cast<int>(v);
    std::cerr << "warning: ignoring invalid STABLE_EXTREMA_PRECISION=\"" << e
              << "\"\n";
  }
  return kDefaultDigits;
}

struct Opts {
  RunConfig cfg;
  std::string alpha;
  std::string rho = "3/5";
  std::string method = "auto";
  std::string role = "convergent";
  std::string x_min = "0.05", x_max = "6";
  long points = 120;
  bool log_x = false;
  std::string u_max = "40", tol = "1e-9";
  // curves
  long n_max = 10;
  long curve_points = 800;
  std::string a_min = "0.02", a_max = "1.98", r_min = "0", r_max = "1";
  // dio
  std::string value;
  int depth = 20;
  std::string b = "2", eps = "0.1";
  int levels = 3;
  std::string min_last_quotient = "0";
  long boost_bits = 0;
  long level = -1;
  std::string x = "1";
  long k_bound = 16, l_bound = 32, q_bound = 100;
  // validate
  std::string w = "0.3";
  std::string bound;
};

BigFloat parse_float_opt(const std::string& s, const char* what) {
  try {
    return BigFloat(s);
  } catch (const std::exception&) {
    throw DomainError(std::string("invalid value for ") + what + ": \"" + s +
                      "\"");
  }
}

void apply_numeric_opts(Opts& o) {
  if (o.cfg.precision_digits < 10 || o.cfg.precision_digits > 10000)
    throw DomainError("--precision must be between 10 and 10000 digits");
  set_working_digits(o.cfg.precision_digits);
  o.cfg.quad.u_max = parse_float_opt(o.u_max, "--u-max");
  o.cfg.quad.refinement_tolerance = parse_float_opt(o.tol, "--tol");
}

std::vector<BigFloat> make_grid(const BigFloat& lo, const BigFloat& hi, long n,
                                bool logspace) {
  if (!(lo > 0)) throw DomainError("the x grid must be strictly positive");
  if (n < 1) throw DomainError("--points must be >= 1");
  if (hi < lo) throw DomainError("--x-max must be >= --x-min");
  if (n > 1 && hi == lo)
    throw DomainError("--x-max must exceed --x-min for a multi-point grid");
  std::vector<BigFloat> xs;
  xs.reserve(n);
  if (n == 1) {
    xs.push_back(lo);
    return xs;
  }
  if (logspace) {
    const BigFloat la = log(lo), h = (log(hi) - la) / (n - 1);
    for (long i = 0; i < n; ++i) xs.push_back(exp(la + h * i));
  } else {
    const BigFloat h = (hi - lo) / (n - 1);
    for (long i = 0; i < n; ++i) xs.push_back(lo + h * i);
  }
  xs.back() = hi;  // pin the endpoint against roundoff drift
  return xs;
}

const char* method_name(CurveMethod m) {
  switch (m) {
    case CurveMethod::convergent_series: return "convergent_series";
    case CurveMethod::asymptotic_series: return "asymptotic_series";
    case CurveMethod::mellin_inversion: return "mellin_inversion";
    case CurveMethod::mc: return "mc";
  }
  return "unknown";
}

McConfig mc_config(const RunConfig& cfg) {
  McConfig mc;
  mc.paths = cfg.paths;
  mc.grid_steps = cfg.grid_steps;
  mc.seed = cfg.seed;
  mc.antithetic = cfg.antithetic;
  return mc;
}

// histogram density estimate from supremum samples; bin edges sit halfway
// between consecutive grid points
DensityCurve mc_histogram(const StableParams& p,
                          const std::vector<BigFloat>& xs,
                          const RunConfig& cfg) {
  const auto samples = sample_sup(p, mc_config(cfg), 1.0);
  const long nb = static_cast<long>(xs.size());
  std::vector<double> cx(nb);
  for (long i = 0; i < nb; ++i) cx[i] = xs[i].convert_to<double>();
  std::vector<double> edges(nb + 1);
  edges[0] = std::max(0.0, cx[0] - (nb > 1 ? (cx[1] - cx[0]) / 2 : 0.5));
  for (long i = 1; i < nb; ++i) edges[i] = (cx[i - 1] + cx[i]) / 2;
  edges[nb] = cx[nb - 1] + (nb > 1 ? (cx[nb - 1] - cx[nb - 2]) / 2 : 0.5);

  DensityCurve out;
  out.method = CurveMethod::mc;
  out.xs = xs;
  const double n = static_cast<double>(samples.size());
  for (long i = 0; i < nb; ++i) {
    const auto lo = std::lower_bound(samples.begin(), samples.end(), edges[i]);
    const auto hi =
        std::lower_bound(samples.begin(), samples.end(), edges[i + 1]);
    const double cnt = static_cast<double>(hi - lo);
    const double w = edges[i + 1] - edges[i];
    out.ps.push_back(BigFloat(cnt / (n * w)));
    out.diagnostics.push_back(BigFloat(std::sqrt(cnt) / (n * w)));  // ~1 SE
  }
  return out;
}

void run_density(Opts& o) {
  apply_numeric_opts(o);
  const AlphaParse ap = parse_alpha(o.alpha);
  if (ap.decimal_literal)
    std::cerr << "warning: decimal alpha treated as the exact rational "
              << ap.canonical << "\n";
  const StableParams p = make_params(ap.alpha, parse_real(o.rho));
  const auto xs = make_grid(parse_float_opt(o.x_min, "--x-min"),
                            parse_float_opt(o.x_max, "--x-max"), o.points,
                            o.log_x);

  std::string method = o.method;
  if (method == "auto") method = ap.alpha.exact_rational ? "mellin" : "series";

  DensityCurve curve;
  if (method == "series") {
    const auto near = near_rational_check(ap.alpha);
    if (near.near && !ap.alpha.exact_rational)
      std::cerr << "warning: alpha is within "
                << to_decimal_string(near.distance, 3) << " of " << near.num
                << "/" << near.den
                << "; series coefficients are ill-conditioned near rationals"
                << " (consider --method mellin at the rational itself)\n";
    const SeriesRole role = o.role == "asymptotic" ? SeriesRole::asymptotic
                                                   : SeriesRole::convergent;
    curve = density_series(p, xs, role, o.cfg.max_m, o.cfg.max_n);
  } else if (method == "mellin") {
    if (!ap.alpha.exact_rational)
      throw DomainError("--method mellin needs an exactly rational alpha, got "
                        + ap.canonical);
    curve = invert_mellin(p, xs, o.cfg.quad);
  } else {
    curve = mc_histogram(p, xs, o.cfg);
  }

  Table t;
  t.columns = {"x", "p", "diag"};
  const int d = o.cfg.precision_digits;
  for (std::size_t i = 0; i < curve.xs.size(); ++i)
    t.rows.push_back({to_decimal_string(curve.xs[i], d),
                      to_decimal_string(curve.ps[i], d),
                      to_decimal_string(curve.diagnostics[i], 3)});
  Diagnostics diag{{"alpha", ap.canonical},
                   {"rho", to_decimal_string(p.rho, d)},
                   {"method", method_name(curve.method)}};
  if (curve.trunc_m || curve.trunc_n) {
    diag.push_back({"trunc_m", std::to_string(curve.trunc_m)});
    diag.push_back({"trunc_n", std::to_string(curve.trunc_n)});
  }
  if (curve.panels) diag.push_back({"panels", std::to_string(curve.panels)});
  write_table(o.cfg, t, diag);
}

void run_mellin(Opts& o) {
  apply_numeric_opts(o);
  const AlphaParse ap = parse_alpha(o.alpha);
  const StableParams p = make_params(ap.alpha, parse_real(o.rho));
  const auto samples = mellin_samples(p, o.cfg.quad);
  Table t;
  t.columns = {"u", "re", "im"};
  const int d = o.cfg.precision_digits;
  for (const auto& s : samples)
    t.rows.push_back({to_decimal_string(s.u, d),
                      to_decimal_string(s.value.re, d),
                      to_decimal_string(s.value.im, d)});
  write_table(o.cfg, t,
              {{"alpha", ap.canonical},
               {"rho", to_decimal_string(p.rho, d)},
               {"line", "s = 1 + iu"}});
}

void run_curves(Opts& o) {
  apply_numeric_opts(o);
  const BigFloat amin = parse_float_opt(o.a_min, "--alpha-min");
  const BigFloat amax = parse_float_opt(o.a_max, "--alpha-max");
  const BigFloat rmin = parse_float_opt(o.r_min, "--rho-min");
  const BigFloat rmax = parse_float_opt(o.r_max, "--rho-max");
  if (o.n_max < 0) throw DomainError("--n-max must be >= 0");
  if (o.curve_points < 1) throw DomainError("--alpha-points must be >= 1");

  Table t;
  t.columns = {"l", "alpha", "rho"};
  if (amax >= amin) {
    const BigFloat h = o.curve_points > 1
                           ? (amax - amin) / (o.curve_points - 1)
                           : BigFloat(0);
    for (long l = -o.n_max; l <= o.n_max; ++l) {
      for (long i = 0; i < o.curve_points; ++i) {
        const BigFloat a = amin + h * i;
        if (!(a > 0) || !(a < 2) || a == 1) continue;
        const BigFloat r = frac(BigFloat(l) / a);
        if (!(r > 0) || !(r < 1)) continue;
        if (a > 1 && (r < 1 - 1 / a || r > 1 / a)) continue;
        if (r < rmin || r > rmax) continue;
        t.rows.push_back({std::to_string(l), to_decimal_string(a, 20),
                          to_decimal_string(r, 20)});
      }
    }
  }
  write_table(o.cfg, t, {{"rows", std::to_string(t.rows.size())}});
}

// ---------- validate ----------

void report(const std::string& name, const BigFloat& value,
            const char* relation, const BigFloat& bound, bool ok) {
  std::cout << name << ": " << to_decimal_string(value, 6) << " " << relation
            << " " << to_decimal_string(bound, 6) << " -> "
            << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) g_status = 1;
}

void run_validate_fig3(Opts& o) {
  apply_numeric_opts(o);
  const AlphaParse ap =
      parse_alpha(o.alpha.empty() ? "3/2+sqrt(2)/50" : o.alpha);
  const StableParams p = make_params(ap.alpha, parse_real(o.rho));
  std::vector<BigFloat> xs;
  for (int i = 1; i <= 9; ++i) xs.push_back(BigFloat(40 + i) / 10);
  const auto conv =
      density_series(p, xs, SeriesRole::convergent, o.cfg.max_m, o.cfg.max_n);
  const auto asym = density_series(p, xs, SeriesRole::asymptotic, 15, 15);
  BigFloat gap = 0;
  Table t;
  t.columns = {"x", "convergent", "asymptotic", "gap"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const BigFloat g = abs(conv.ps[i] - asym.ps[i]);
    if (g > gap) gap = g;
    t.rows.push_back({to_decimal_string(xs[i], 6),
                      to_decimal_string(conv.ps[i], o.cfg.precision_digits),
                      to_decimal_string(asym.ps[i], o.cfg.precision_digits),
                      to_decimal_string(g, 6)});
  }
  const BigFloat bound =
      parse_float_opt(o.bound.empty() ? kFig3Bound : o.bound, "--bound");
  report("series agreement on (4,5): max |convergent(" +
             std::to_string(o.cfg.max_m) + "," + std::to_string(o.cfg.max_n) +
             ") - asymptotic(15,15)|",
         gap, "<", bound, gap < bound);
  if (!o.cfg.output_path.empty())
    write_table(o.cfg, t, {{"alpha", ap.canonical}});
}

void run_validate_fig4(Opts& o) {
  apply_numeric_opts(o);
  const StableParams base =
      make_params(alpha_from_rational(3, 2), parse_real(o.rho));
  std::vector<BigFloat> xs;
  for (int i = 1; i <= 25; ++i) xs.push_back(BigFloat(2 * i) / 10);
  const auto avg = perturbation_average(base, sqrt(BigFloat(2)) / 50, xs,
                                        o.cfg.max_m, o.cfg.max_n);
  const auto inv = invert_mellin(base, xs, o.cfg.quad);
  BigFloat gap = 0;
  Table t;
  t.columns = {"x", "series_average", "inversion", "gap"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const BigFloat g = abs(avg.ps[i] - inv.ps[i]);
    if (g > gap) gap = g;
    t.rows.push_back({to_decimal_string(xs[i], 6),
                      to_decimal_string(avg.ps[i], o.cfg.precision_digits),
                      to_decimal_string(inv.ps[i], o.cfg.precision_digits),
                      to_decimal_string(g, 6)});
  }
  // the perturbed-series average should track the exact inversion to about
  // the size of the alpha perturbation squared -- small but clearly nonzero
  report("perturbed-series average vs inversion on [0.2,5]: max gap", gap, "<",
         BigFloat("1e-3"), gap < BigFloat("1e-3"));
  report("  ... and the gap is genuinely the perturbation, not zero", gap, ">",
         BigFloat("1e-6"), gap > BigFloat("1e-6"));
  if (!o.cfg.output_path.empty())
    write_table(o.cfg, t, {{"delta", "sqrt(2)/50"}});
}

void run_validate_moments(Opts& o) {
  apply_numeric_opts(o);
  const StableParams p =
      make_params(alpha_from_rational(3, 2), parse_real(o.rho));
  const BigFloat w = parse_float_opt(o.w, "--w");
  const MomentCheck mk = moment_crosscheck(p, w);
  report("moment identity at w=" + o.w + ": relative gap", mk.rel_gap, "<",
         BigFloat("1e-5"), mk.rel_gap < BigFloat("1e-5"));
  if (!o.cfg.output_path.empty()) {
    Table t;
    t.columns = {"w", "integral_route", "closed_form", "rel_gap"};
    t.rows.push_back({to_decimal_string(mk.w, 6),
                      to_decimal_string(mk.lhs, o.cfg.precision_digits),
                      to_decimal_string(mk.rhs, o.cfg.precision_digits),
                      to_decimal_string(mk.rel_gap, 6)});
    write_table(o.cfg, t, {});
  }
}

void run_validate_mc(Opts& o) {
  apply_numeric_opts(o);
  const StableParams p =
      make_params(alpha_from_rational(3, 2), parse_real(o.rho));
  const McConfig mc = mc_config(o.cfg);

  const double target = p.rho.convert_to<double>();
  const double pos = positive_fraction(sample_stable(p, mc.paths, mc.seed));
  const double se =
      std::sqrt(target * (1 - target) / static_cast<double>(mc.paths));
  report("positivity fraction |estimate - rho|", BigFloat(std::abs(pos - target)),
         "<", BigFloat(3 * se), std::abs(pos - target) < 3 * se);

  const auto sup = sample_sup(p, mc, 1.0);
  std::vector<BigFloat> q;
  q.reserve(sup.size());
  for (const double v : sup) q.push_back(BigFloat(v));
  const auto F = inversion_cdf(p, q, o.cfg.quad);
  std::vector<double> Fd;
  Fd.reserve(F.size());
  for (const auto& f : F) Fd.push_back(f.convert_to<double>());
  const double ks = ks_distance(sup, Fd);
  const BigFloat bound =
      parse_float_opt(o.bound.empty() ? kMcKsBound : o.bound, "--bound");
  report("Kolmogorov distance MC vs inversion CDF", BigFloat(ks), "<", bound,
         BigFloat(ks) < bound);
  if (!o.cfg.output_path.empty()) {
    Table t;
    t.columns = {"statistic", "value"};
    t.rows.push_back({"positivity", to_decimal_string(BigFloat(pos), 8)});
    t.rows.push_back({"ks", to_decimal_string(BigFloat(ks), 8)});
    write_table(o.cfg, t, {});
  }
}

// ---------- dio ----------

void emit_cf(const Opts& o, const ContinuedFraction& cf, Diagnostics diag) {
  Table t;
  t.columns = {"n", "a", "p", "q"};
  t.rows.push_back({"0", cf.a0.str(), cf.convergents[0].first.str(),
                    cf.convergents[0].second.str()});
  for (std::size_t n = 1; n < cf.convergents.size(); ++n)
    t.rows.push_back({std::to_string(n), cf.quotients[n - 1].str(),
                      cf.convergents[n].first.str(),
                      cf.convergents[n].second.str()});
  diag.push_back({"precision_exhausted", cf.precision_exhausted ? "1" : "0"});
  diag.push_back({"constructed", cf.constructed ? "1" : "0"});
  write_table(o.cfg, t, diag);
}

void run_dio_expand(Opts& o) {
  apply_numeric_opts(o);
  std::string v = o.value;
  if (v.rfind("sqrt", 0) == 0 && v.size() > 4 &&
      v.find('(') == std::string::npos)
    v = "sqrt(" + v.substr(4) + ")";  // accept the "sqrt2" shorthand
  const RealParse rp = parse_real_full(v);
  const ContinuedFraction cf = rp.is_rational ? cf_expand(rp.rational, o.depth)
                                              : cf_expand(rp.value, o.depth);
  emit_cf(o, cf, {{"value", rp.canonical}});
}

LtConstructConfig ltilde_config(const Opts& o) {
  LtConstructConfig lc;
  lc.levels = o.levels;
  lc.min_last_quotient = o.boost_bits > 0 ? BigInt(BigInt(1) << o.boost_bits)
                                          : BigInt(o.min_last_quotient);
  return lc;
}

void run_dio_ltilde(Opts& o) {
  apply_numeric_opts(o);
  const BigFloat b = parse_float_opt(o.b, "--b");
  const BigFloat eps = parse_float_opt(o.eps, "--eps");
  const auto cf = construct_L_tilde(b, eps, ltilde_config(o));
  const auto verdict = test_L_tilde(cf, b, eps);
  emit_cf(o, cf,
          {{"growth_witnesses", std::to_string(verdict.witness.size())},
           {"b", o.b},
           {"eps", o.eps}});
}

void run_dio_witness(Opts& o) {
  apply_numeric_opts(o);
  const BigFloat b = parse_float_opt(o.b, "--b");
  const BigFloat eps = parse_float_opt(o.eps, "--eps");
  const auto cf = construct_L_tilde(b, eps, ltilde_config(o));
  const auto shifted = cf_shift(cf, 1);  // move the value into (1,2)
  const long count = static_cast<long>(shifted.convergents.size());
  // the bound at q_n needs the next convergent's enclosure, so the deepest
  // usable level is the second-to-last one
  const long idx = o.level < 0 ? count - 2 : o.level;
  if (idx < 0 || idx >= count)
    throw DomainError("--level must name one of the " + std::to_string(count) +
                      " convergents");
  const BigInt q = shifted.convergents[idx].second;
  const auto wr =
      divergence_witness(shifted, parse_real(o.rho), parse_float_opt(o.x, "--x"), q);
  emit_cf(o, shifted,
          {{"rho", o.rho},
           {"x", o.x},
           {"q", wr.q.str()},
           {"lower_bound", to_decimal_string(wr.lower_bound, o.cfg.precision_digits)},
           {"exceeds_one", wr.exceeds_one ? "1" : "0"}});
}

void run_dio_doney(Opts& o) {
  apply_numeric_opts(o);
  const AlphaParse ap = parse_alpha(o.alpha);
  const StableParams p = make_params(ap.alpha, parse_real(o.rho));
  const auto kl = doney_search(p, o.k_bound, o.l_bound);
  Table t;
  t.columns = {"found", "k", "l"};
  if (kl)
    t.rows.push_back(
        {"1", std::to_string(kl->first), std::to_string(kl->second)});
  else
    t.rows.push_back({"0", "", ""});
  write_table(o.cfg, t,
              {{"alpha", ap.canonical},
               {"rho", o.rho},
               {"k_bound", std::to_string(o.k_bound)},
               {"l_bound", std::to_string(o.l_bound)}});
}

void run_dio_approx(Opts& o) {
  apply_numeric_opts(o);
  const AlphaParse ap = parse_alpha(o.alpha);
  const auto r = inhom_approx(ap.alpha, parse_real(o.rho), o.q_bound);
  Table t;
  t.columns = {"l", "approx_rho", "error"};
  t.rows.push_back({std::to_string(r.l),
                    to_decimal_string(r.approx_rho, o.cfg.precision_digits),
                    to_decimal_string(r.error, o.cfg.precision_digits)});
  write_table(o.cfg, t,
              {{"alpha", ap.canonical},
               {"rho", o.rho},
               {"q_bound", std::to_string(o.q_bound)}});
}

// ---------- wiring ----------

void add_io_opts(CLI::App* s, Opts& o) {
  s->add_option("--precision", o.cfg.precision_digits,
                "working significant digits")
      ->capture_default_str();
  s->add_option("--format", o.cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  s->add_option("-o,--output", o.cfg.output_path,
                "output file (default: stdout)");
}

void add_param_opts(CLI::App* s, Opts& o) {
  s->add_option("--alpha", o.alpha,
                "stability index: \"3/2\", \"1.5\", \"3/2+sqrt(2)/50\"")
      ->required();
  s->add_option("--rho", o.rho, "positivity parameter, same grammar")
      ->capture_default_str();
}

void add_quad_opts(CLI::App* s, Opts& o) {
  s->add_option("--u-max", o.u_max, "inversion integral truncation point")
      ->capture_default_str();
  s->add_option("--panels", o.cfg.quad.panels, "initial Filon panel count")
      ->capture_default_str();
  s->add_option("--tol", o.tol, "panel-doubling convergence tolerance")
      ->capture_default_str();
}

void add_series_opts(CLI::App* s, Opts& o) {
  s->add_option("--max-m", o.cfg.max_m, "series truncation order in m")
      ->capture_default_str();
  s->add_option("--max-n", o.cfg.max_n, "series truncation order in n")
      ->capture_default_str();
}

void add_mc_opts(CLI::App* s, Opts& o) {
  s->add_option("--paths", o.cfg.paths, "Monte-Carlo path count")
      ->capture_default_str();
  s->add_option("--grid-steps", o.cfg.grid_steps,
                "time-discretization steps per path")
      ->capture_default_str();
  s->add_option("--seed", o.cfg.seed, "random seed")->capture_default_str();
  s->add_flag("--antithetic", o.cfg.antithetic, "pair paths with mirrored draws");
}

int error_json(const char* type, const std::string& message, int code,
               const Diagnostics& extra = {}) {
  nlohmann::json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  for (const auto& [k, v] : extra) j["error"][k] = v;
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  o.cfg.precision_digits = default_precision();

  CLI::App app{"supremum of a strictly stable process: densities, Mellin "
               "transform, Monte-Carlo checks, and continued-fraction "
               "diagnostics"};
  app.require_subcommand(1);

  auto* den = app.add_subcommand(
      "density", "density of the supremum at time 1 on an x grid");
  add_param_opts(den, o);
  add_io_opts(den, o);
  add_quad_opts(den, o);
  add_series_opts(den, o);
  add_mc_opts(den, o);
  den->add_option("--method", o.method,
                  "auto, series, mellin, or mc (auto: mellin when alpha is "
                  "exactly rational, series otherwise)")
      ->check(CLI::IsMember({"auto", "series", "mellin", "mc"}))
      ->capture_default_str();
  den->add_option("--role", o.role, "series sum to evaluate")
      ->check(CLI::IsMember({"convergent", "asymptotic"}))
      ->capture_default_str();
  den->add_option("--x-min", o.x_min)->capture_default_str();
  den->add_option("--x-max", o.x_max)->capture_default_str();
  den->add_option("--points", o.points, "grid size")->capture_default_str();
  den->add_flag("--log-x", o.log_x, "geometric instead of uniform grid");
  den->callback([&o] { run_density(o); });

  auto* mel = app.add_subcommand(
      "mellin", "Mellin transform M(1+iu) on the inversion contour");
  add_param_opts(mel, o);
  add_io_opts(mel, o);
  add_quad_opts(mel, o);
  mel->callback([&o] { run_mellin(o); });

  auto* val = app.add_subcommand(
      "validate", "cross-checks with pinned tolerances; exits 1 on breach");
  val->require_subcommand(1);
  auto* vf3 = val->add_subcommand(
      "fig3", "convergent vs asymptotic series agreement on (4,5)");
  vf3->add_option("--alpha", o.alpha, "override the default perturbed alpha");
  vf3->add_option("--rho", o.rho)->capture_default_str();
  vf3->add_option("--bound", o.bound, "override the pinned tolerance");
  add_series_opts(vf3, o);
  add_io_opts(vf3, o);
  vf3->callback([&o] { run_validate_fig3(o); });

  auto* vf4 = val->add_subcommand(
      "fig4", "perturbed-series average vs Mellin inversion at alpha=3/2");
  vf4->add_option("--rho", o.rho)->capture_default_str();
  add_series_opts(vf4, o);
  add_quad_opts(vf4, o);
  add_io_opts(vf4, o);
  vf4->callback([&o] { run_validate_fig4(o); });

  auto* vmo = val->add_subcommand(
      "moments", "Mellin moment identity vs direct Laplace-factor integral");
  vmo->add_option("--rho", o.rho)->capture_default_str();
  vmo->add_option("--w", o.w, "moment order, must lie in (0, alpha rho)")
      ->capture_default_str();
  add_io_opts(vmo, o);
  vmo->callback([&o] { run_validate_moments(o); });

  auto* vmc = val->add_subcommand(
      "mc", "Monte-Carlo positivity and CDF agreement at (3/2, 3/5)");
  vmc->add_option("--rho", o.rho)->capture_default_str();
  auto* vmc_paths = vmc->add_option("--paths", o.cfg.paths);
  auto* vmc_grid = vmc->add_option("--grid-steps", o.cfg.grid_steps);
  auto* vmc_seed = vmc->add_option("--seed", o.cfg.seed);
  vmc->add_option("--bound", o.bound, "override the pinned KS bound");
  add_quad_opts(vmc, o);
  add_io_opts(vmc, o);
  vmc->callback([&o, vmc_paths, vmc_grid, vmc_seed] {
    if (!vmc_paths->count()) o.cfg.paths = 100000;
    if (!vmc_grid->count()) o.cfg.grid_steps = 10000;
    if (!vmc_seed->count()) o.cfg.seed = 20260825;
    run_validate_mc(o);
  });

  auto* cur = app.add_subcommand(
      "curves", "resonance curves rho = {l/alpha} over the admissible set");
  cur->add_option("--n-max", o.n_max, "keep |l| <= this")->capture_default_str();
  cur->add_option("--alpha-min", o.a_min)->capture_default_str();
  cur->add_option("--alpha-max", o.a_max)->capture_default_str();
  cur->add_option("--rho-min", o.r_min)->capture_default_str();
  cur->add_option("--rho-max", o.r_max)->capture_default_str();
  cur->add_option("--alpha-points", o.curve_points, "alpha grid size")
      ->capture_default_str();
  add_io_opts(cur, o);
  cur->callback([&o] { run_curves(o); });

  auto* dio = app.add_subcommand("dio", "continued-fraction diagnostics");
  dio->require_subcommand(1);

  auto* dex = dio->add_subcommand("expand", "continued-fraction expansion");
  dex->add_option("--value", o.value,
                  "number to expand (same grammar as --alpha, any magnitude; "
                  "\"sqrt2\" shorthand accepted)")
      ->required();
  dex->add_option("--depth", o.depth, "partial quotients to compute")
      ->capture_default_str();
  add_io_opts(dex, o);
  dex->callback([&o] { run_dio_expand(o); });

  auto* dlt = dio->add_subcommand(
      "ltilde", "build a fast-approximable irrational from the growth rule");
  dlt->add_option("--b", o.b, "growth base, > 1")->capture_default_str();
  dlt->add_option("--eps", o.eps, "log exponent slack, > 0")
      ->capture_default_str();
  dlt->add_option("--levels", o.levels, "construction depth")
      ->capture_default_str();
  dlt->add_option("--min-last-quotient", o.min_last_quotient,
                  "raise the final quotient to at least this (decimal)")
      ->capture_default_str();
  dlt->add_option("--boost-bits", o.boost_bits,
                  "shorthand: min last quotient = 2^bits");
  add_io_opts(dlt, o);
  dlt->callback([&o] { run_dio_ltilde(o); });

  auto* dwt = dio->add_subcommand(
      "witness",
      "certified lower bound showing a density-series term exceeding 1");
  dwt->add_option("--b", o.b)->capture_default_str();
  dwt->add_option("--eps", o.eps)->capture_default_str();
  dwt->add_option("--levels", o.levels)->capture_default_str();
  dwt->add_option("--min-last-quotient", o.min_last_quotient)
      ->capture_default_str();
  dwt->add_option("--boost-bits", o.boost_bits,
                  "shorthand: min last quotient = 2^bits");
  dwt->add_option("--rho", o.rho)->capture_default_str();
  dwt->add_option("--x", o.x, "evaluation point of the series term")
      ->capture_default_str();
  dwt->add_option("--level", o.level,
                  "which convergent denominator to use (default: deepest)");
  add_io_opts(dwt, o);
  dwt->callback([&o] { run_dio_witness(o); });

  auto* ddn = dio->add_subcommand(
      "doney", "smallest-l solution of rho + k = l/alpha");
  add_param_opts(ddn, o);
  ddn->add_option("--k-bound", o.k_bound)->capture_default_str();
  ddn->add_option("--l-bound", o.l_bound)->capture_default_str();
  add_io_opts(ddn, o);
  ddn->callback([&o] { run_dio_doney(o); });

  auto* dap = dio->add_subcommand(
      "approx", "best approximation of rho by fractional parts {l/alpha}");
  add_param_opts(dap, o);
  dap->add_option("--q-bound", o.q_bound, "search |l| up to this")
      ->capture_default_str();
  add_io_opts(dap, o);
  dap->callback([&o] { run_dio_approx(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    return error_json("UsageError", e.what(), 2);
  } catch (const RationalAlphaError& e) {
    return error_json("RationalAlphaError", e.what(), 2,
                      {{"sine_index", std::to_string(e.sine_index)},
                       {"product_side", std::string(1, e.product_side)}});
  } catch (const QuadratureError& e) {
    return error_json("QuadratureError", e.what(), 3);
  } catch (const OverflowError& e) {
    return error_json("OverflowError", e.what(), 3);
  } catch (const ResourceError& e) {
    return error_json("ResourceError", e.what(), 3);
  } catch (const PoleError& e) {
    return error_json("PoleError", e.what(), 2);
  } catch (const BranchError& e) {
    return error_json("BranchError", e.what(), 2);
  } catch (const DomainError& e) {
    return error_json("DomainError", e.what(), 2);
  } catch (const Error& e) {
    return error_json("Error", e.what(), 3);
  } catch (const std::exception& e) {
    return error_json("InternalError", e.what(), 3);
  }
  return g_status;
}
