#include "stieltjes/multiquad.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stieltjes::multiquad {

namespace {

struct BudgetExhausted {};

struct EvalBudget {
  long remaining;
  void charge() {
    if (--remaining < 0) throw BudgetExhausted{};
  }
};

QuadResult integrate_axis_fn(const std::function<double(double)>& f, const Axis& ax,
                             double tol) {
  Fn1D fn;
  fn.eval = f;
  fn.a = ax.a;
  fn.b = ax.b;
  fn.upper_infinite = ax.upper_infinite;
  fn.singular_a = ax.singular_a;
  fn.singular_b = ax.singular_b;
  if (ax.upper_infinite || ax.singular_a || ax.singular_b) {
    return quad::integrate_de(fn, tol);
  }
  return quad::integrate_adaptive(fn, tol);
}

}  // namespace

QuadResult integrate_box(const NAryFn& f, const BoxSpec& box, double tol) {
  size_t n = box.axes.size();
  if (n < 2 || n > 3) throw std::invalid_argument("integrate_box: n must be 2 or 3");
  if (box.budget < 1000) throw std::invalid_argument("integrate_box: budget must be >= 1000");

  EvalBudget budget{box.budget};
  std::vector<double> coords(n);
  long n_evals = 0;
  double inner_err = 0.0;  // worst inner error estimate seen

  // recursive iterated integration over levels >= 1; level 0 is run below
  std::function<double(size_t, double)> level_fn = [&](size_t level, double level_tol) -> double {
    const Axis& ax = box.axes[level];
    auto integrand = [&, level, level_tol](double x) -> double {
      coords[level] = x;
      if (level + 1 == n) {
        budget.charge();
        ++n_evals;
        return f(coords);
      }
      return level_fn(level + 1, level_tol * 0.25);
    };
    QuadResult r = integrate_axis_fn(integrand, ax, level_tol);
    if (r.err_est > inner_err) inner_err = r.err_est;
    return r.value;
  };

  QuadResult out;
  try {
    auto outer_integrand = [&](double x) -> double {
      coords[0] = x;
      return level_fn(1, tol * 0.25);
    };
    QuadResult r = integrate_axis_fn(outer_integrand, box.axes[0], tol);
    out.value = r.value;
    out.err_est = r.err_est + inner_err;
    out.converged = r.converged && out.err_est <= tol * std::max(1.0, std::abs(out.value));
    out.n_evals = n_evals;
  } catch (const BudgetExhausted&) {
    out.n_evals = n_evals;
    out.converged = false;
    // coarse fallback estimate on one fixed Kronrod panel per axis
    std::vector<double> pt(n);
    std::function<double(size_t)> coarse = [&](size_t level) -> double {
      const Axis& ax = box.axes[level];
      double hi = ax.upper_infinite ? ax.a + 20.0 : ax.b;
      auto g = [&](double x) {
        pt[level] = x;
        if (level + 1 == n) return f(pt);
        return coarse(level + 1);
      };
      return quad::gk15_panel(g, ax.a, hi).kronrod;
    };
    out.value = coarse(0);
    out.err_est = std::abs(out.value);
  }
  return out;
}

QuadResult integrate_simplex_ordered(const NAryFn& f, int n, double tol, long budget) {
  if (n < 1 || n > 3) throw std::invalid_argument("integrate_simplex_ordered: n must be 1..3");
  if (budget < 1000) throw std::invalid_argument("integrate_simplex_ordered: budget >= 1000");

  EvalBudget eb{budget};
  std::vector<double> coords(n);
  long n_evals = 0;
  double inner_err = 0.0;

  // coords[n-1] is the outermost variable (upper limit 1); coords[0] the innermost
  std::function<double(int, double, double)> level_fn = [&](int idx, double upper,
                                                            double level_tol) -> double {
    Fn1D fn;
    fn.a = 0.0;
    fn.b = upper;
    fn.singular_a = true;  // DE rule on every axis
    fn.singular_b = true;
    fn.eval = [&, idx, level_tol](double x) -> double {
      coords[idx] = x;
      if (idx == 0) {
        eb.charge();
        ++n_evals;
        return f(coords);
      }
      return level_fn(idx - 1, x, level_tol * 0.25);
    };
    QuadResult r = quad::integrate_de(fn, level_tol);
    if (r.err_est > inner_err && idx < n - 1) inner_err = r.err_est;
    return r.value;
  };

  QuadResult out;
  try {
    Fn1D outer;
    outer.a = 0.0;
    outer.b = 1.0;
    outer.singular_a = true;
    outer.singular_b = true;
    outer.eval = [&](double x) -> double {
      coords[n - 1] = x;
      if (n == 1) {
        eb.charge();
        ++n_evals;
        return f(coords);
      }
      return level_fn(n - 2, x, tol * 0.25);
    };
    QuadResult r = quad::integrate_de(outer, tol);
    out.value = r.value;
    out.err_est = r.err_est + inner_err;
    out.converged = r.converged;
    out.n_evals = n_evals;
  } catch (const BudgetExhausted&) {
    out.converged = false;
    out.n_evals = n_evals;
    out.value = 0.0;
    out.err_est = std::numeric_limits<double>::infinity();
  }
  return out;
}

namespace {

// tanh-sinh node in [-1, 1] with weight
struct TSNode {
  double x, w;
};

TSNode ts_node(double t) {
  double u = 1.5707963267948966 * std::sinh(t);
  double x = std::tanh(u);
  double w = 1.5707963267948966 * std::cosh(t) / (std::cosh(u) * std::cosh(u));
  return {x, w};
}

}  // namespace

QuadResult symmetric_double_integral(const Fn1D& F, const Fn1D& H, double a, double b,
                                     double tol, const kernels::DDConfig& cfg,
                                     bool swap_axes) {
  long n_evals = 0;

  auto kernel = [&](double t1, double t2) -> double {
    ++n_evals;
    return kernels::divided_difference2(F, H.eval(t1), H.eval(t2), cfg);
  };

  // inner integral over (a, t_out) plus its error estimate
  auto inner_at = [&](double t_out) -> std::pair<double, double> {
    Fn1D inner;
    inner.a = a;
    inner.b = t_out;
    inner.singular_a = true;
    inner.singular_b = true;
    inner.eval = [&](double t_in) {
      return swap_axes ? kernel(t_out, t_in) : kernel(t_in, t_out);
    };
    QuadResult r = quad::integrate_de(inner, tol * 0.0625);
    return {r.value, r.err_est};
  };

  // outer tanh-sinh loop carrying both the value and the weighted inner
  // error, so corner integrals with large local uncertainty are damped by
  // the same double-exponential weights that damp their contribution
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  const double t_max = 3.20;
  double edge_mag = 0.0;
  const double t_edge = 3.12;

  auto eval_at = [&](double t) -> std::pair<double, double> {
    TSNode nd = ts_node(t);
    if (1.0 - std::abs(nd.x) < 1e-15) return {0.0, 0.0};
    auto [v, e] = inner_at(c + r * nd.x);
    double term = v * nd.w * r;
    if (std::abs(t) > t_edge - 0.35) edge_mag = std::max(edge_mag, std::abs(term));
    return {term, std::abs(e) * nd.w * r};
  };

  double h = 1.0;
  long m = static_cast<long>(std::floor(t_max / h));
  auto [s0, e0] = eval_at(0.0);
  double vsum = s0, esum = e0;
  for (long j = 1; j <= m; ++j) {
    auto [v1, er1] = eval_at(j * h);
    auto [v2, er2] = eval_at(-j * h);
    vsum += v1 + v2;
    esum += er1 + er2;
  }
  double prev = vsum * h;
  double prev_err = esum * h;
  double value = prev;
  double err = std::numeric_limits<double>::max();
  bool converged = false;

  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    m = static_cast<long>(std::floor(t_max / h));
    edge_mag = 0.0;
    double vadd = 0.0, eadd = 0.0;
    for (long j = 1; j <= m; j += 2) {
      auto [v1, er1] = eval_at(j * h);
      auto [v2, er2] = eval_at(-j * h);
      vadd += v1 + v2;
      eadd += er1 + er2;
    }
    value = 0.5 * prev + vadd * h;
    prev_err = 0.5 * prev_err + eadd * h;
    double own = std::abs(value - prev) + 0.25 * edge_mag;
    err = own + prev_err;
    prev = value;
    double tol_eff = tol * std::max(1.0, std::abs(value));
    if (level >= 3 && err <= tol_eff) {
      converged = true;
      break;
    }
    // further refinement cannot push the accumulated inner-error floor down;
    // stop once the value channel is well past the tolerance
    if (level >= 3 && own <= 0.1 * tol_eff && prev_err > 0.5 * tol_eff) break;
  }

  QuadResult out;
  out.value = 2.0 * value;
  out.err_est = 2.0 * err;
  out.converged = converged && out.err_est <= 2.0 * tol * std::max(1.0, std::abs(out.value));
  out.n_evals = n_evals;
  return out;
}

}  // namespace stieltjes::multiquad
