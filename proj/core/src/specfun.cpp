#include "stieltjes/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace stieltjes::specfun {

namespace {

using cd = std::complex<double>;

// zeta at non-positive integers, used by the expansion of Li_n around z = 1.
// zeta(0) = -1/2, zeta(-2m) = 0, zeta(1-2m) = -B_{2m}/(2m).
double zeta_nonpositive(int n) {
  switch (n) {
    case 0: return -0.5;
    case -1: return -1.0 / 12.0;
    case -3: return 1.0 / 120.0;
    case -5: return -1.0 / 252.0;
    case -7: return 1.0 / 240.0;
    case -9: return -1.0 / 132.0;
    case -11: return 691.0 / 32760.0;
    case -13: return -1.0 / 12.0;
    case -15: return 3617.0 / 8160.0;
    default: return 0.0;  // negative even integers
  }
}

double zeta_int(int n) {
  if (n <= 0) return zeta_nonpositive(n);
  return zeta(n);
}

// Alternating series acceleration by iterated averaging of partial sums.
// Good to near machine precision for smoothly decaying alternating terms.
double euler_accelerated(const std::vector<double>& terms, int depth) {
  std::vector<double> row(terms.size());
  double s = 0.0;
  for (size_t i = 0; i < terms.size(); ++i) {
    s += terms[i];
    row[i] = s;
  }
  for (int d = 0; d < depth && row.size() > 1; ++d) {
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return row.back();
}

// eta(n) = sum (-1)^{k-1} k^{-n}, so zeta(n) = eta(n) / (1 - 2^{1-n}).
double zeta_via_eta(int n) {
  std::vector<double> terms(48);
  for (size_t k = 0; k < terms.size(); ++k) {
    double t = std::pow(static_cast<double>(k + 1), -n);
    terms[k] = (k % 2 == 0) ? t : -t;
  }
  double eta = euler_accelerated(terms, 24);
  return eta / (1.0 - std::pow(2.0, 1.0 - n));
}

cd polylog_direct(int n, cd z, int kmax) {
  cd sum = 0.0;
  cd zk = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    zk *= z;
    cd term = zk / std::pow(static_cast<double>(k), n);
    sum += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && k > 8) break;
  }
  return sum;
}

// Tail sum_{k>=K} z^k k^{-n} via the Euler (summation-by-parts) transform:
//   T = sum_l z^{K+l} (Delta^l a)_K / (1-z)^{l+1},  a_k = k^{-n}.
cd polylog_tail_euler(int n, cd z, int K) {
  constexpr int L = 28;
  std::vector<double> diff(L + 1);
  for (int j = 0; j <= L; ++j) diff[j] = std::pow(static_cast<double>(K + j), -n);
  cd one_minus_z = 1.0 - z;
  cd zpow = std::pow(z, K);  // |z| <= 1, K moderate: stable
  cd factor = zpow / one_minus_z;
  cd sum = 0.0;
  double prev = std::numeric_limits<double>::max();
  for (int l = 0; l <= L; ++l) {
    cd term = factor * diff[0];
    double mag = std::abs(term);
    if (mag > prev) break;  // asymptotic regime: keep the best partial sum
    sum += term;
    prev = mag;
    if (mag < 1e-19 * (1.0 + std::abs(sum))) break;
    for (int j = 0; j + 1 <= L - l; ++j) diff[j] = diff[j + 1] - diff[j];
    factor *= z / one_minus_z;
  }
  return sum;
}

// Expansion around z = 1 (mu = log z, |mu| < 2 pi), n >= 2:
//   Li_n(e^mu) = mu^{n-1}/(n-1)! (H_{n-1} - log(-mu))
//              + sum_{k>=0, k != n-1} zeta(n-k) mu^k / k!
cd polylog_near_one(int n, cd mu) {
  double harmonic = 0.0;
  for (int j = 1; j <= n - 1; ++j) harmonic += 1.0 / j;
  double fact = 1.0;
  for (int j = 2; j <= n - 1; ++j) fact *= j;
  cd mu_pow = std::pow(mu, n - 1);
  cd value = mu_pow / fact * (harmonic - std::log(-mu));
  cd muk = 1.0;
  double kfact = 1.0;
  for (int k = 0; k <= 20; ++k) {
    if (k > 0) {
      muk *= mu;
      kfact *= k;
    }
    if (k == n - 1) continue;
    value += zeta_int(n - k) * muk / kfact;
  }
  return value;
}

}  // namespace

double catalan() { return kCatalan; }

double zeta(int n) {
  if (n < 2) throw std::domain_error("zeta: requires n >= 2");
  switch (n) {
    case 2: return kZeta2;
    case 3: return kZeta3;
    case 4: return kPi * kPi * kPi * kPi / 90.0;
    case 5: return kZeta5;
    case 6: return std::pow(kPi, 6) / 945.0;
    default: break;
  }
  return zeta_via_eta(n);
}

std::complex<double> polylog(int n, std::complex<double> z) {
  if (n < 1) throw std::domain_error("polylog: requires n >= 1");
  double r = std::abs(z);
  if (r > 1.0 + 1e-12) throw std::domain_error("polylog: requires |z| <= 1");
  if (std::abs(z - cd(1.0, 0.0)) < 1e-15) {
    if (n == 1) throw std::domain_error("polylog: Li_1 undefined at z = 1");
    return zeta(n);
  }
  if (n == 1) return -std::log(1.0 - z);
  if (r <= 0.5) return polylog_direct(n, z, 64);

  cd mu = std::log(z);
  if (std::abs(mu) <= 0.8) {
    if (n == 2 || n == 3) return polylog_near_one(n, mu);
    // k^{-n} tails are already fast for n >= 4
    return polylog_direct(n, z, 8000);
  }
  constexpr int K = 400;
  return polylog_direct(n, z, K - 1) + polylog_tail_euler(n, z, K);
}

double polygamma3(double x) {
  if (x <= 0.0) throw std::domain_error("polygamma3: requires x > 0");
  constexpr int K = 100000;
  double sum = 0.0;
  for (int k = K - 1; k >= 0; --k) {
    double u = x + k;
    double u2 = u * u;
    sum += 1.0 / (u2 * u2);
  }
  // Euler-Maclaurin tail from k = K
  double u = x + K;
  double tail = 1.0 / (3.0 * u * u * u) + 1.0 / (2.0 * std::pow(u, 4)) + 1.0 / (3.0 * std::pow(u, 5));
  return 6.0 * (sum + tail);
}

std::complex<double> complex_arccos(std::complex<double> w) {
  cd i(0.0, 1.0);
  return -i * std::log(w + i * std::sqrt(1.0 - w * w));
}

}  // namespace stieltjes::specfun
