#include "stieltjes/duality.hpp"

#include <cmath>
#include <stdexcept>

#include "stieltjes/kernels.hpp"
#include "stieltjes/specfun.hpp"

namespace stieltjes::duality {

namespace {

using specfun::kPi;

// log(1+z)/z with the removable point at z = 0
double log1p_over_z(double z) {
  if (std::abs(z) < 1e-8) return 1.0 - 0.5 * z + z * z / 3.0;
  return std::log1p(z) / z;
}

// arccos(z)/sqrt(1-z^2) on [0, 1), limit 1 at z = 1
double arccos_ratio(double z) {
  if (z > 1.0 - 1e-10) return 1.0 + (1.0 - z) / 3.0;
  return std::acos(z) / std::sqrt(1.0 - z * z);
}

// arccosh(1/z)/sqrt(1-z^2) on (0, 1), limit 1 at z = 1
double arcsech_ratio(double z) {
  if (z > 1.0 - 1e-10) return 1.0 - (1.0 - z) / 3.0;
  double s = std::sqrt(1.0 - z * z);
  return std::log((1.0 + s) / z) / s;
}

std::vector<StieltjesPair> build_catalog() {
  std::vector<StieltjesPair> v;

  {
    StieltjesPair p;
    p.name = "arcsine01";
    p.f.eval = [](double x) { return 1.0 / std::sqrt(1.0 - x * x); };
    p.f.a = 0.0;
    p.f.b = 1.0;
    p.f.singular_b = true;
    Fn1D h;
    h.eval = [](double z) { return arccos_ratio(z); };
    h.a = 0.0;
    h.b = 1.0;
    h.derivative = [](double z) {
      if (z > 1.0 - 1e-7) return -1.0 / 3.0;
      double s2 = 1.0 - z * z;
      return (z * std::acos(z) / std::sqrt(s2) - 1.0) / s2;
    };
    p.fhat_closed = h;
    p.notes = "weight 1/sqrt(1-x^2) on [0,1]; hat = arccos(z)/sqrt(1-z^2)";
    v.push_back(std::move(p));
  }
  {
    StieltjesPair p;
    p.name = "arcsine_full";
    p.f.eval = [](double x) { return 1.0 / std::sqrt(1.0 - x * x); };
    p.f.a = -1.0;
    p.f.b = 1.0;
    p.f.singular_a = true;
    p.f.singular_b = true;
    Fn1D h;
    h.eval = [](double z) { return kPi / std::sqrt(1.0 - z * z); };
    h.a = 0.0;
    h.b = 1.0;
    h.singular_b = true;
    h.derivative = [](double z) { return kPi * z / std::pow(1.0 - z * z, 1.5); };
    p.fhat_closed = h;
    p.notes = "weight 1/sqrt(1-x^2) on [-1,1]; hat = pi/sqrt(1-z^2)";
    v.push_back(std::move(p));
  }
  {
    StieltjesPair p;
    p.name = "sec_branch";
    p.f.eval = [](double x) { return 1.0 / std::sqrt(x * x - 1.0); };
    p.f.a = 1.0;
    p.f.upper_infinite = true;
    p.f.singular_a = true;
    Fn1D h;
    h.eval = [](double z) { return arcsech_ratio(z); };
    h.a = 0.0;
    h.b = 1.0;
    h.singular_a = true;  // log blow-up at z = 0
    p.fhat_closed = h;
    p.notes = "weight 1/sqrt(x^2-1) on [1,inf); hat = arccosh(1/z)/sqrt(1-z^2)";
    v.push_back(std::move(p));
  }
  {
    StieltjesPair p;
    p.name = "cauchy";
    p.f.eval = [](double x) { return 1.0 / (1.0 + x * x); };
    p.f.a = 0.0;
    p.f.upper_infinite = true;
    Fn1D h;
    h.eval = [](double z) {
      double zl = (z == 0.0) ? 0.0 : z * std::log(z);
      return (kPi / 2.0 + zl) / (1.0 + z * z);
    };
    h.a = 0.0;
    h.b = 1.0;
    p.fhat_closed = h;
    p.notes = "weight 1/(1+x^2) on [0,inf); hat = (pi/2 + z log z)/(1+z^2)";
    v.push_back(std::move(p));
  }
  {
    StieltjesPair p;
    p.name = "uniform01";
    p.f.eval = [](double) { return 1.0; };
    p.f.a = 0.0;
    p.f.b = 1.0;
    Fn1D h;
    h.eval = [](double z) { return log1p_over_z(z); };
    h.a = 0.0;
    h.b = 1.0;
    h.derivative = [](double z) {
      if (std::abs(z) < 1e-6) return -0.5 + 2.0 * z / 3.0;
      return (z / (1.0 + z) - std::log1p(z)) / (z * z);
    };
    p.fhat_closed = h;
    p.notes = "weight 1 on [0,1]; hat = log(1+z)/z";
    v.push_back(std::move(p));
  }
  return v;
}

}  // namespace

const std::vector<StieltjesPair>& pair_catalog() {
  static const std::vector<StieltjesPair> catalog = build_catalog();
  return catalog;
}

const StieltjesPair& pair_by_name(const std::string& name) {
  for (const auto& p : pair_catalog()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown Stieltjes pair: " + name);
}

QuadResult hat_transform_numeric(const StieltjesPair& p, double z, double tol) {
  if (z != 0.0) {
    double pole = -1.0 / z;
    bool inside = p.f.upper_infinite ? (pole >= p.f.a) : (pole >= p.f.a && pole <= p.f.b);
    if (inside) throw std::domain_error("hat_transform_numeric: pole inside the domain of f");
  }
  Fn1D g = p.f;
  auto base = p.f.eval;
  g.derivative = nullptr;
  g.eval = [base, z](double x) { return base(x) / (1.0 + x * z); };
  return quad::integrate_de(g, tol);
}

Fn1D hat_fn(const StieltjesPair& p, double tol) {
  if (p.fhat_closed) return *p.fhat_closed;
  Fn1D h;
  h.a = 0.0;
  h.b = 1.0;
  const StieltjesPair* pp = &p;
  h.eval = [pp, tol](double z) { return hat_transform_numeric(*pp, z, tol).value; };
  return h;
}

DualityRecord verify_duality(std::span<const StieltjesPair* const> pairs, double tol) {
  if (pairs.size() < 3 || pairs.size() > 4) {
    throw std::invalid_argument("verify_duality: need n+1 pairs with n in {2, 3}");
  }
  const int n = static_cast<int>(pairs.size()) - 1;
  const StieltjesPair& last = *pairs[n];

  Fn1D fhat_last = hat_fn(last);
  kernels::DDConfig cfg;

  // LHS: kernel of x^{n-1} fhat_{n+1} against the product of weights
  multiquad::BoxSpec box;
  for (int i = 0; i < n; ++i) {
    const Fn1D& fi = pairs[i]->f;
    multiquad::Axis ax;
    ax.a = fi.a;
    ax.b = fi.b;
    ax.upper_infinite = fi.upper_infinite;
    ax.singular_a = fi.singular_a;
    ax.singular_b = fi.singular_b;
    box.axes.push_back(ax);
  }
  box.budget = 4000000;
  auto lhs_fn = [&](std::span<const double> x) {
    double k = kernels::stieltjes_kernel(fhat_last, x, cfg);
    double w = 1.0;
    for (int i = 0; i < n; ++i) w *= pairs[i]->f.eval(x[i]);
    return k * w;
  };
  QuadResult lhs = multiquad::integrate_box(lhs_fn, box, tol);

  // RHS: f_{n+1} against the product of the other hats, over dom f_{n+1}
  std::vector<Fn1D> hats;
  hats.reserve(n);
  for (int i = 0; i < n; ++i) hats.push_back(hat_fn(*pairs[i]));
  Fn1D rhs_fn = last.f;
  auto base = last.f.eval;
  rhs_fn.derivative = nullptr;
  rhs_fn.eval = [base, &hats](double x) {
    double v = base(x);
    for (const auto& h : hats) v *= h.eval(x);
    return v;
  };
  // hats may blow up at an endpoint (sec_branch at 0, arcsine_full at 1)
  for (const auto& h : hats) {
    if (h.singular_a) rhs_fn.singular_a = true;
    if (h.singular_b) rhs_fn.singular_b = true;
  }
  QuadResult rhs = quad::integrate_de(rhs_fn, tol * 0.1);

  DualityRecord rec;
  rec.lhs = lhs.value;
  rec.rhs = rhs.value;
  rec.abs_err = std::abs(lhs.value - rhs.value);
  rec.n_evals = lhs.n_evals + rhs.n_evals;
  rec.converged = lhs.converged && rhs.converged;
  return rec;
}

QuadResult multivariate_lhs_cos(int n, double tol, long budget) {
  if (n != 2 && n != 3) throw std::invalid_argument("multivariate_lhs_cos: n in {2, 3}");
  const StieltjesPair& u01 = pair_by_name("uniform01");
  Fn1D fhat = *u01.fhat_closed;
  kernels::DDConfig cfg;

  multiquad::BoxSpec box;
  for (int i = 0; i < n; ++i) {
    multiquad::Axis ax;
    ax.a = 0.0;
    ax.b = kPi / 2.0;
    box.axes.push_back(ax);
  }
  box.budget = budget;
  std::vector<double> nodes(n);
  auto f = [&](std::span<const double> th) {
    for (int i = 0; i < n; ++i) nodes[i] = std::cos(th[i]);
    return kernels::stieltjes_kernel(fhat, nodes, cfg);
  };
  return multiquad::integrate_box(f, box, tol);
}

QuadResult j_n(int n, double tol) {
  if (n < 1) throw std::invalid_argument("j_n: n >= 1");
  Fn1D f;
  f.a = 0.0;
  f.b = kPi / 2.0;
  f.eval = [n](double z) {
    if (z <= 0.0) return 0.0;
    double s = std::sin(z);
    return std::pow(z, n) / std::pow(s, n - 1);
  };
  return quad::integrate_de(f, tol);
}

TanRecord multivariate_lhs_tan(int n, double tol, long budget) {
  if (n != 2 && n != 3) throw std::invalid_argument("multivariate_lhs_tan: n in {2, 3}");
  const StieltjesPair& u01 = pair_by_name("uniform01");
  Fn1D fhat = *u01.fhat_closed;
  kernels::DDConfig cfg;

  multiquad::BoxSpec box;
  for (int i = 0; i < n; ++i) {
    multiquad::Axis ax;
    ax.a = 0.0;
    ax.upper_infinite = true;
    box.axes.push_back(ax);
  }
  box.budget = budget;
  auto f = [&](std::span<const double> x) {
    double k = kernels::stieltjes_kernel(fhat, x, cfg);
    double w = 1.0;
    for (int i = 0; i < n; ++i) w *= 1.0 / (1.0 + x[i] * x[i]);
    return k * w;
  };
  TanRecord rec;
  rec.lhs = multiquad::integrate_box(f, box, tol);
  rec.rhs = tan_rhs(n, tol * 0.1);
  return rec;
}

QuadResult tan_rhs(int n, double tol) {
  Fn1D rhs;
  rhs.a = 0.0;
  rhs.b = 1.0;
  rhs.singular_a = true;
  rhs.eval = [n](double z) {
    double num = kPi / 2.0 + z * std::log(z);
    return std::pow(num, n) / std::pow(1.0 + z * z, n);
  };
  return quad::integrate_de(rhs, tol);
}

}  // namespace stieltjes::duality
