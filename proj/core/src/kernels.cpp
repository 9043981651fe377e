#include "stieltjes/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace stieltjes::kernels {

namespace {

double eval_checked(const Fn1D& F, double x) {
  double v = F.eval(x);
  if (!std::isfinite(v)) {
    throw quad::EvaluationError(
        "divided difference: function undefined at node x = " + std::to_string(x), x);
  }
  return v;
}

double derivative_at(const Fn1D& F, double x, double h, bool analytic) {
  if (analytic && F.derivative) return F.derivative(x);
  // 4th-order central difference
  double f1 = eval_checked(F, x + h) - eval_checked(F, x - h);
  double f2 = eval_checked(F, x + 2 * h) - eval_checked(F, x - 2 * h);
  return (8.0 * f1 - f2) / (12.0 * h);
}

// Plain Newton table; assumes nodes pairwise separated.
double newton_table(const Fn1D& g, const std::vector<double>& nodes) {
  size_t n = nodes.size();
  std::vector<double> col(n);
  for (size_t i = 0; i < n; ++i) col[i] = eval_checked(g, nodes[i]);
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = 0; i + j < n; ++i) {
      col[i] = (col[i + 1] - col[i]) / (nodes[i + j] - nodes[i]);
    }
  }
  return col[0];
}

// Spread every cluster of near-coincident nodes symmetrically about its
// mean to exact `sep` separation. A cluster sitting against a domain edge
// must not leave the evaluable range, so the spread never goes below the
// original cluster minimum.
std::vector<double> spread_clusters(const std::vector<double>& sorted, double sep) {
  std::vector<double> out;
  out.reserve(sorted.size());
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i + 1;
    while (j < sorted.size() && sorted[j] - sorted[j - 1] < sep) ++j;
    size_t m = j - i;
    if (m == 1) {
      out.push_back(sorted[i]);
    } else {
      double mean = 0.0;
      for (size_t k = i; k < j; ++k) mean += sorted[k];
      mean /= static_cast<double>(m);
      double lo = mean - 0.5 * (m - 1) * sep;
      if (lo < sorted[i]) lo = sorted[i];
      for (size_t k = 0; k < m; ++k) out.push_back(lo + static_cast<double>(k) * sep);
    }
    i = j;
  }
  return out;
}

}  // namespace

double divided_difference2(const Fn1D& F, double u, double v, const DDConfig& cfg) {
  double scale = std::max({1.0, std::abs(u), std::abs(v)});
  if (std::abs(u - v) >= cfg.delta * scale) {
    return (eval_checked(F, u) - eval_checked(F, v)) / (u - v);
  }
  double m = 0.5 * (u + v);
  return derivative_at(F, m, cfg.delta * scale, cfg.analytic_derivative);
}

double newton_dd(const Fn1D& g, std::span<const double> nodes, const DDConfig& cfg) {
  if (nodes.empty()) throw std::invalid_argument("newton_dd: needs at least one node");
  std::vector<double> xs(nodes.begin(), nodes.end());
  std::sort(xs.begin(), xs.end());
  if (xs.size() == 1) return eval_checked(g, xs[0]);

  double scale = 1.0;
  for (double x : xs) scale = std::max(scale, std::abs(x));
  double sep = cfg.delta * scale;

  bool clustered = false;
  for (size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] - xs[i - 1] < sep) {
      clustered = true;
      break;
    }
  }
  if (!clustered) return newton_table(g, xs);

  double coarse = newton_table(g, spread_clusters(xs, sep));
  double fine = newton_table(g, spread_clusters(xs, 0.5 * sep));
  return 2.0 * fine - coarse;  // cancels the O(delta) spreading bias
}

double stieltjes_kernel(const Fn1D& fhat, std::span<const double> nodes, const DDConfig& cfg) {
  if (nodes.size() < 2) throw std::invalid_argument("stieltjes_kernel: needs n >= 2 nodes");
  int power = static_cast<int>(nodes.size()) - 1;
  Fn1D g;
  g.a = fhat.a;
  g.b = fhat.b;
  g.upper_infinite = fhat.upper_infinite;
  g.eval = [power, &fhat](double x) { return std::pow(x, power) * fhat.eval(x); };
  return newton_dd(g, nodes, cfg);
}

}  // namespace stieltjes::kernels
