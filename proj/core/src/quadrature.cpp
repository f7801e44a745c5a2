#include "stex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "stex/errors.hpp"

namespace stex {

namespace {

// Legendre P_n and its derivative at x via the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre_pd(int n, const BigFloat& x) {
  BigFloat p0(1), p1 = x;
  for (int k = 2; k <= n; ++k) {
    BigFloat p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  BigFloat deriv = n * (x * p1 - p0) / (x * x - 1);
  return {p1, deriv};
}

GaussLegendre compute_rule(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const BigFloat eps10 = 10 * working_eps();
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton at full precision
    double guess = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    BigFloat x(guess);
    for (int it = 0; it < 60; ++it) {
      auto [p, d] = legendre_pd(n, x);
      BigFloat dx = p / d;
      x -= dx;
      if (abs(dx) < eps10 * (abs(x) + 1)) break;
    }
    auto [p, d] = legendre_pd(n, x);
    (void)p;
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * d * d);
  }
  return rule;
}

template <typename V>
V panel_sum(const std::function<V(const BigFloat&)>& f, const BigFloat& a,
            const BigFloat& b, const GaussLegendre& rule, long& evals) {
  const BigFloat half = (b - a) / 2;
  const BigFloat mid = (a + b) / 2;
  V acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += f(mid + half * rule.nodes[i]) * rule.weights[i];
    ++evals;
  }
  return acc * half;
}

// Worst-panel-first global refinement.  Each panel keeps its half-interval
// estimates so splitting it reuses them as the children's coarse values.
template <typename V>
struct Panel {
  BigFloat a, b;
  V coarse, left, right, refined;
  BigFloat err;
  int depth = 0;
};

template <typename V>
Panel<V> make_panel(const std::function<V(const BigFloat&)>& f,
                    const BigFloat& a, const BigFloat& b, V coarse, int depth,
                    const GaussLegendre& rule, long& evals) {
  Panel<V> p;
  p.a = a;
  p.b = b;
  p.depth = depth;
  const BigFloat mid = (a + b) / 2;
  p.left = panel_sum(f, a, mid, rule, evals);
  p.right = panel_sum(f, mid, b, rule, evals);
  p.refined = p.left + p.right;
  p.err = abs(coarse - p.refined);
  p.coarse = std::move(coarse);
  return p;
}

template <typename V>
V integrate_impl(const std::function<V(const BigFloat&)>& f, const BigFloat& a,
                 const BigFloat& b, const QuadOptions& opt) {
  if (a == b) return V{};
  if (b < a) return V{} - integrate_impl(f, b, a, opt);
  const GaussLegendre& rule = gauss_legendre(opt.panel_order);
  const BigFloat fallback =
      pow(BigFloat(10), -static_cast<int>(working_digits()) + 6);
  const BigFloat rel_tol = opt.rel_tol > 0 ? opt.rel_tol : fallback;
  const BigFloat abs_tol = opt.abs_tol > 0 ? opt.abs_tol : fallback;

  long evals = 0;
  std::vector<Panel<V>> heap;
  const auto by_err = [](const Panel<V>& x, const Panel<V>& y) {
    return x.err < y.err;
  };
  const V root_coarse = panel_sum(f, a, b, rule, evals);
  heap.push_back(make_panel(f, a, b, root_coarse, 0, rule, evals));
  V total = heap.front().refined;
  BigFloat err_sum = heap.front().err;

  while (err_sum > abs_tol && err_sum > rel_tol * abs(total)) {
    std::pop_heap(heap.begin(), heap.end(), by_err);
    const Panel<V> worst = std::move(heap.back());
    heap.pop_back();
    if (worst.depth >= opt.max_depth)
      throw QuadratureError(
          "adaptive quadrature failed to converge (depth exhausted)");
    if (evals > opt.max_evals)
      throw QuadratureError("adaptive quadrature exceeded its evaluation budget");
    const BigFloat mid = (worst.a + worst.b) / 2;
    Panel<V> l = make_panel(f, worst.a, mid, worst.left, worst.depth + 1, rule,
                            evals);
    Panel<V> r = make_panel(f, mid, worst.b, worst.right, worst.depth + 1, rule,
                            evals);
    total += l.refined + r.refined - worst.refined;
    err_sum += l.err + r.err - worst.err;
    heap.push_back(std::move(l));
    std::push_heap(heap.begin(), heap.end(), by_err);
    heap.push_back(std::move(r));
    std::push_heap(heap.begin(), heap.end(), by_err);
  }
  // re-sum the leaves to shed the drift of the incremental updates
  V out{};
  for (const Panel<V>& p : heap) out += p.refined;
  return out;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 2 || n > 200) throw DomainError("gauss_legendre order out of range");
  static std::map<std::pair<int, unsigned>, GaussLegendre> cache;
  const auto key = std::make_pair(n, working_digits());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_rule(n)).first;
  return it->second;
}

BigFloat integrate(const std::function<BigFloat(const BigFloat&)>& f,
                   const BigFloat& a, const BigFloat& b, const QuadOptions& opt) {
  return integrate_impl<BigFloat>(f, a, b, opt);
}

BigComplex integrate_complex(const std::function<BigComplex(const BigFloat&)>& f,
                             const BigFloat& a, const BigFloat& b,
                             const QuadOptions& opt) {
  return integrate_impl<BigComplex>(f, a, b, opt);
}

}  // namespace stex
