#include "stieltjes/hadamard.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "stieltjes/specfun.hpp"

namespace stieltjes::hadamard {

namespace {

using cd = std::complex<double>;
using specfun::kPi;

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Detects an isolated jump between adjacent samples: a step that exceeds
// 10x the local variation of its neighbours.
void branch_guard_check(const std::function<cd(double)>& g, int n) {
  std::vector<double> delta(n);
  std::vector<cd> vals(n + 1);
  for (int j = 0; j <= n; ++j) vals[j] = g(kTwoPi * j / n);
  double scale = 0.0;
  for (int j = 0; j < n; ++j) {
    delta[j] = std::abs(vals[j + 1] - vals[j]);
    scale = std::max(scale, std::abs(vals[j]));
  }
  for (int j = 1; j + 1 < n; ++j) {
    double local = 0.5 * (delta[j - 1] + delta[j + 1]) + 1e-9 * (scale + 1.0);
    if (delta[j] > 10.0 * local && delta[j] > 1e-6 * (scale + 1.0)) {
      throw BranchError("contour integrand jumps between adjacent nodes near theta = " +
                        std::to_string(kTwoPi * j / n));
    }
  }
}

}  // namespace

std::complex<double> PowerSeriesFn::eval(std::complex<double> z) const {
  cd sum = 0.0;
  cd zn = 1.0;
  long cap = max_degree >= 0 ? max_degree : 4000;
  int small_streak = 0;
  for (long n = 0; n <= cap; ++n) {
    if (n > 0) zn *= z;
    double c = coeff(n);
    if (c != 0.0) sum += c * zn;
    if (max_degree < 0) {
      if (std::abs(c) * std::abs(zn) < 1e-18 * (1.0 + std::abs(sum)) && n > 8) {
        if (++small_streak > 4) break;
      } else {
        small_streak = 0;
      }
    }
  }
  return sum;
}

PowerSeriesFn PowerSeriesFn::log1p() {
  PowerSeriesFn f;
  f.coeff = [](long n) {
    if (n == 0) return 0.0;
    double c = 1.0 / static_cast<double>(n);
    return (n % 2 == 1) ? c : -c;
  };
  return f;
}

PowerSeriesFn PowerSeriesFn::monomial(long k) {
  PowerSeriesFn f;
  f.coeff = [k](long n) { return n == k ? 1.0 : 0.0; };
  f.max_degree = k;
  return f;
}

PowerSeriesFn PowerSeriesFn::geometric(double a) {
  PowerSeriesFn f;
  f.coeff = [a](long n) { return n == 0 ? 0.0 : std::pow(a, n); };
  return f;
}

PowerSeriesFn PowerSeriesFn::polynomial(std::vector<double> coeffs) {
  PowerSeriesFn f;
  long deg = static_cast<long>(coeffs.size()) - 1;
  f.coeff = [c = std::move(coeffs)](long n) {
    return (n >= 0 && n < static_cast<long>(c.size())) ? c[n] : 0.0;
  };
  f.max_degree = deg;
  return f;
}

std::complex<double> arccos_gf(std::complex<double> w) {
  if (std::abs(w) >= 1.0) throw std::domain_error("arccos_gf: requires |w| < 1");
  cd ac = specfun::complex_arccos(-w);
  return ac * ac / (1.0 - w * w);
}

GeneratingFn GeneratingFn::cosine() {
  GeneratingFn g;
  g.alpha = 0.0;
  g.beta = kPi / 2.0;
  g.eval = [](cd w) { return arccos_gf(w); };
  g.coefficient = [](long n) {
    // B_n = sum_{k=0}^n W_k W_{n-k}, W_k the cosine moments on [0, pi/2]
    std::vector<double> w(n + 1);
    w[0] = kPi / 2.0;
    if (n >= 1) w[1] = 1.0;
    for (long k = 2; k <= n; ++k) w[k] = w[k - 2] * (k - 1) / static_cast<double>(k);
    double b = 0.0;
    for (long k = 0; k <= n; ++k) b += w[k] * w[n - k];
    return b;
  };
  return g;
}

GeneratingFn GeneratingFn::from_coefficients(std::function<double(long)> b, long max_degree) {
  GeneratingFn g;
  g.coefficient = b;
  g.eval = [b, max_degree](cd z) {
    cd sum = 0.0;
    cd zn = 1.0;
    long cap = max_degree >= 0 ? max_degree : 4000;
    int small_streak = 0;
    for (long n = 0; n <= cap; ++n) {
      if (n > 0) zn *= z;
      double c = b(n);
      sum += c * zn;
      if (max_degree < 0) {
        if (std::abs(c) * std::abs(zn) < 1e-18 * (1.0 + std::abs(sum)) && n > 8) {
          if (++small_streak > 4) break;
        } else {
          small_streak = 0;
        }
      }
    }
    return sum;
  };
  return g;
}

GeneratingFn GeneratingFn::from_h(const Fn1D& h, double a, double b, double tol) {
  GeneratingFn g;
  g.alpha = a;
  g.beta = b;
  auto h_eval = h.eval;
  auto base_integral = [h_eval, a, b, tol](cd z) -> cd {
    Fn1D re;
    re.a = a;
    re.b = b;
    re.eval = [h_eval, z](double t) {
      cd v = 1.0 / (1.0 - z * h_eval(t));
      return v.real();
    };
    Fn1D im = re;
    im.eval = [h_eval, z](double t) {
      cd v = 1.0 / (1.0 - z * h_eval(t));
      return v.imag();
    };
    QuadResult r = quad::integrate_adaptive(re, tol);
    QuadResult i = quad::integrate_adaptive(im, tol);
    return cd(r.value, i.value);
  };
  g.eval = [base_integral](cd z) {
    cd v = base_integral(z);
    return v * v;
  };
  // contour extraction of B_n at radius 1/2
  g.coefficient = [base_integral](long n) {
    const int m = 256;
    cd sum = 0.0;
    const double r = 0.5;
    for (int j = 0; j < m; ++j) {
      double th = kTwoPi * j / m;
      cd z = std::polar(r, th);
      cd v = base_integral(z);
      sum += v * v * std::polar(1.0, -n * th);
    }
    return (sum / static_cast<double>(m)).real() / std::pow(r, n);
  };
  return g;
}

double double_integral_via_contour(const PowerSeriesFn& F, double z, double tol,
                                   ContourVariant variant) {
  if (!(z > 0.0 && z < 1.0)) {
    throw std::domain_error("double_integral_via_contour: requires 0 < z < 1");
  }
  double rz = std::sqrt(z);
  auto integrand = [&](double theta) -> cd {
    cd eta = std::polar(rz, theta);
    cd w = (variant == ContourVariant::conjugate) ? std::polar(rz, -theta)
                                                  : std::polar(rz, theta);
    return F.eval(eta) * w * arccos_gf(w);
  };
  branch_guard_check(integrand, 512);
  ComplexQuadResult r = quad::integrate_periodic(integrand, tol);
  cd value = r.value / kTwoPi;
  if (std::abs(value.imag()) > 1e-8) {
    std::fprintf(stderr,
                 "double_integral_via_contour: discarding imaginary part %.3e at z = %g\n",
                 value.imag(), z);
  }
  return value.real();
}

double hadamard_product(const PowerSeriesFn& F, const GeneratingFn& G, double z, double tol) {
  if (!(z >= 0.0 && z < 1.0)) {
    throw std::domain_error("hadamard_product: requires 0 <= z < 1");
  }
  if (z == 0.0) return 0.0;
  double rz = std::sqrt(z);
  auto integrand = [&](double theta) -> cd {
    cd eta = std::polar(rz, theta);
    cd wc = std::polar(rz, -theta);
    return F.eval(eta) * wc * G.eval(wc);
  };
  branch_guard_check(integrand, 512);
  ComplexQuadResult r = quad::integrate_periodic(integrand, tol);
  cd value = r.value / kTwoPi;
  if (std::abs(value.imag()) > 1e-8) {
    std::fprintf(stderr, "hadamard_product: discarding imaginary part %.3e at z = %g\n",
                 value.imag(), z);
  }
  return value.real();
}

}  // namespace stieltjes::hadamard
