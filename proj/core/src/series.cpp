#include "stieltjes/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stieltjes/specfun.hpp"

namespace stieltjes::series {

namespace {

constexpr int kEulerDepth = 8;

double averaged_value(const std::vector<double>& terms, int depth, double* est_err) {
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
  if (est_err) {
    *est_err = row.size() > 1 ? std::abs(row[row.size() - 1] - row[row.size() - 2])
                              : std::abs(row.back());
  }
  return row.back();
}

}  // namespace

SeriesResult alternating_sum(const std::function<double(long)>& term, double tol,
                             long max_terms) {
  std::vector<double> terms;
  terms.reserve(64);
  double prev_nonzero = 0.0;
  long sign_checked_from = 0;

  auto fetch = [&](long upto) {
    while (static_cast<long>(terms.size()) < upto) {
      long k = static_cast<long>(terms.size());
      double t = term(k);
      if (!std::isfinite(t)) throw ContractError("alternating_sum: non-finite term");
      if (t != 0.0) {
        if (prev_nonzero != 0.0 && t * prev_nonzero > 0.0 && k >= 50) {
          throw ContractError("alternating_sum: terms stopped alternating at index " +
                              std::to_string(k));
        }
        if (prev_nonzero != 0.0 && t * prev_nonzero > 0.0) sign_checked_from = k + 1;
        prev_nonzero = t;
      }
      terms.push_back(t);
    }
  };

  long m = 32;
  fetch(m);
  double est = 0.0;
  double value = averaged_value(terms, kEulerDepth, &est);
  while (est > 0.25 * tol && m < max_terms) {
    m = std::min(max_terms, m + 32);
    fetch(m);
    value = averaged_value(terms, kEulerDepth, &est);
  }
  (void)sign_checked_from;

  double first_omitted = std::abs(term(m));
  SeriesResult out;
  out.value = value;
  out.tail_bound = std::max(est, first_omitted);
  out.terms_used = m;
  return out;
}

SeriesResult mzv_tail_triple(long k_outer, double tol, bool doubled) {
  if (k_outer < 1000) throw std::invalid_argument("mzv_tail_triple: K_outer >= 1000 required");
  const double wscale = doubled ? 1.0 : 0.5;  // w_l = wscale / l

  // odd harmonic numbers O_l = sum_{m=0}^{l-1} 1/(2m+1), built incrementally
  auto odd_harmonic = [](long l) {
    double o = 0.0;
    for (long m = 0; m < l; ++m) o += 1.0 / (2 * m + 1);
    return o;
  };
  auto a_term = [&](long l, double o_l) {
    double t = wscale * o_l / static_cast<double>(l);
    return (l % 2 == 0) ? -t : t;  // (-1)^{l+1}
  };

  // T_K = sum_{l >= K+1} a_l, accelerated; |a_l| = w O_l/l is decreasing, so
  // the alternation is structural and the averaging residual is the
  // operative error
  const long K = k_outer;
  double o_base = odd_harmonic(K + 1);
  SeriesResult inner;
  {
    std::vector<double> terms(96);
    double o = o_base;
    for (int j = 0; j < 96; ++j) {
      terms[j] = a_term(K + 1 + j, o);
      o += 1.0 / (2 * (K + 1 + j) + 1);
    }
    double est = 0.0;
    inner.value = averaged_value(terms, kEulerDepth, &est);
    inner.tail_bound = est;
    inner.terms_used = 96;
  }

  // outer tail sum_{k > K} T_k/(2k+1), accelerated; T_k = T_{k-1} - a_k upward
  double t_up = inner.value;
  double o_up = o_base;
  std::vector<double> outer_tail_terms(48);
  for (int j = 0; j < 48; ++j) {
    long k = K + 1 + j;
    t_up -= a_term(k, o_up);  // now t_up = T_k
    o_up += 1.0 / (2 * k + 1);
    outer_tail_terms[j] = t_up / (2 * k + 1);
  }
  double tail_est = 0.0;
  double outer_tail = averaged_value(outer_tail_terms, kEulerDepth, &tail_est);

  // main sum k = K down to 1; T_{k-1} = a_k + T_k
  double sum = 0.0;
  double t_down = inner.value;  // T_K
  double o_down = o_base;       // O_{K+1}
  for (long k = K; k >= 1; --k) {
    sum += t_down / (2 * k + 1);
    o_down -= 1.0 / (2 * k + 1);              // O_k
    t_down = a_term(k, o_down) + t_down;      // T_{k-1}
  }

  SeriesResult out;
  out.value = sum + outer_tail;
  // an error in T_K propagates through every downward step, damped by the
  // 1/(2k+1) outer weights (factor ~ log K / 2)
  double lnk = std::log(static_cast<double>(K));
  out.tail_bound = inner.tail_bound * lnk + tail_est +
                   std::abs(outer_tail_terms[47]) + 1e-16 * lnk;
  out.terms_used = K + inner.terms_used + 48;
  return out;
}

SeriesResult mzv_depth2(double tol) {
  (void)tol;
  // b_k = (-1)^{k-1} sigma_k / k with sigma_k = sum_{n<k} (-1)^n/(2n+1).
  // Adjacent pairs c_m = b_{2m-1} + b_{2m} are positive and ~C/m^2; the tail
  // is corrected by the leading 1/m^2 estimate.
  const long M = 60000;
  double sigma = 0.0;
  double sum = 0.0;
  double c_last = 0.0;
  for (long m = 1; m <= M; ++m) {
    long k1 = 2 * m - 1;
    sigma += (k1 % 2 == 1) ? 1.0 / (2 * k1 - 1) : -1.0 / (2 * k1 - 1);
    double b1 = sigma / k1;
    long k2 = 2 * m;
    sigma += (k2 % 2 == 1) ? 1.0 / (2 * k2 - 1) : -1.0 / (2 * k2 - 1);
    double b2 = -sigma / k2;
    c_last = b1 + b2;
    sum += c_last;
  }
  double tail = c_last * static_cast<double>(M);
  SeriesResult out;
  out.value = sum + tail;
  out.tail_bound = std::max(std::abs(tail) / M, 1e-12);
  out.terms_used = 2 * M;
  return out;
}

namespace {

// sum_{m>=0} (-1)^m / (c + 2m), accelerated
double alternating_inverse_sum(double c) {
  constexpr int N = 44;
  std::vector<double> terms(N);
  for (int m = 0; m < N; ++m) {
    double t = 1.0 / (c + 2.0 * m);
    terms[m] = (m % 2 == 0) ? t : -t;
  }
  return averaged_value(terms, 20, nullptr);
}

}  // namespace

SeriesResult t_value_triple(double tol) {
  (void)tol;
  const long K = 3000;
  double sum = 0.0;
  double u_last = 0.0;
  long terms = 0;
  for (long k = 0; k <= K; ++k) {
    // middle: sum_l (-1)^l/(2k+2l+2) * I(k,l)
    constexpr int L = 44;
    std::vector<double> mid(L);
    for (int l = 0; l < L; ++l) {
      double inner = alternating_inverse_sum(2.0 * k + 2.0 * l + 3.0);
      double t = inner / (2.0 * k + 2.0 * l + 2.0);
      mid[l] = (l % 2 == 0) ? t : -t;
      terms += 44;
    }
    double m_k = averaged_value(mid, 20, nullptr);
    u_last = m_k / (2.0 * k + 1.0);
    sum += u_last;
  }
  double tail = u_last * static_cast<double>(K) / 2.0;  // sum_{k>K} A/k^3 with A = u_K K^3
  SeriesResult out;
  out.value = sum + tail;
  out.tail_bound = 2.0 * std::abs(u_last) + 1e-12 * K;
  out.terms_used = terms;
  return out;
}

double e_even(int k) {
  if (k < 1) throw std::invalid_argument("e_even: k >= 1 required");
  double s = 0.0;
  for (int l = 0; l < k; ++l) {
    double t = 1.0 / (2 * l + 1);
    s += (l % 2 == 0) ? t : -t;
  }
  return 2.0 * specfun::kPi * s;
}

double e_odd(int n) {
  if (n < 0) throw std::invalid_argument("e_odd: n >= 0 required");
  double h = 0.0;  // sum_{m=0}^{k-1} 1/(2m+1)
  double s = 0.0;
  for (int k = 1; k <= n; ++k) {
    h += 1.0 / (2 * k - 1);
    double t = h / k;
    s += (k % 2 == 1) ? t : -t;
  }
  return specfun::kPi * specfun::kPi / 4.0 + 4.0 * s;
}

SeriesResult fourier_double_integral(const FourierCoefficients& c, double tol) {
  const double pi = specfun::kPi;
  const double e_limit = pi * pi / 2.0;

  // incremental E_k runner: E_{2m} = 2 pi sigma_m, E_{2m+1} = pi^2/4 + 4 rho_m
  struct ERunner {
    double sigma = 0.0;  // sum_{l<m} (-1)^l/(2l+1)
    double rho = 0.0;    // sum_{n<=m} (-1)^{n+1} h_n / n
    double h = 0.0;      // sum_{m'<n} 1/(2m'+1)
    long m_even = 0, m_odd = 0;
    double next(long k) {
      if (k % 2 == 0) {
        long m = k / 2;
        while (m_even < m) {
          sigma += (m_even % 2 == 0) ? 1.0 / (2 * m_even + 1) : -1.0 / (2 * m_even + 1);
          ++m_even;
        }
        return 2.0 * specfun::kPi * sigma;
      }
      long m = (k - 1) / 2;
      while (m_odd < m) {
        ++m_odd;
        h += 1.0 / (2 * m_odd - 1);
        double t = h / m_odd;
        rho += (m_odd % 2 == 1) ? t : -t;
      }
      return specfun::kPi * specfun::kPi / 4.0 + 4.0 * rho;
    }
  };

  auto abel_sum = [&](double r) -> double {
    ERunner er;
    double s = 0.0;
    double rk = 1.0;
    double recent = 0.0;
    for (long k = 1; k <= c.truncation; ++k) {
      rk *= r;
      double ak = c.alpha(k);
      double ek = er.next(k);
      s += ak * ek * rk;
      if (!std::isfinite(s) || std::abs(s) > 1e9) {
        throw ContractError("fourier_double_integral: partial sums unbounded");
      }
      recent = std::max(std::abs(ak), 0.5 * recent);
      if (k >= 64 && recent * e_limit * rk / std::max(1e-300, 1.0 - r) < 1e-17) break;
    }
    return s;
  };

  SeriesResult out;
  if (c.decay == FourierCoefficients::Decay::geometric) {
    ERunner er;
    double s = 0.0;
    long used = 0;
    int small_streak = 0;
    for (long k = 1; k <= c.truncation; ++k) {
      double ak = c.alpha(k);
      double ek = er.next(k);
      double t = ak * ek;
      s += t;
      used = k;
      if (!std::isfinite(s) || std::abs(s) > 1e9) {
        throw ContractError("fourier_double_integral: partial sums unbounded");
      }
      if (std::abs(t) < 1e-17 * (1.0 + std::abs(s))) {
        if (++small_streak >= 8) break;
      } else {
        small_streak = 0;
      }
    }
    out.value = s;
    out.tail_bound = std::abs(c.alpha(used)) * e_limit;
    out.terms_used = used;
    return out;
  }

  if (c.truncation < 10000) {
    throw std::invalid_argument("fourier_double_integral: harmonic decay requires K >= 1e4");
  }
  // Abel radii r_j = 1 - 2^{-j}; stencils eliminate (h^p, h^p log h) pairs
  int jmax = static_cast<int>(std::floor(std::log2(static_cast<double>(c.truncation) / 38.0)));
  jmax = std::clamp(jmax, 7, 12);
  const int j0 = 4;
  std::vector<double> vals;
  for (int j = j0; j <= jmax; ++j) vals.push_back(abel_sum(1.0 - std::ldexp(1.0, -j)));

  std::vector<double> cur = vals;
  int p = 1;
  while (cur.size() >= 3) {
    double g = std::pow(4.0, p) / std::pow(std::pow(2.0, p) - 1.0, 2);
    double a = g / std::pow(4.0, p);
    double b = -2.0 * g / std::pow(2.0, p);
    std::vector<double> next(cur.size() - 2);
    for (size_t i = 0; i + 2 < cur.size(); ++i) {
      next[i] = a * cur[i] + b * cur[i + 1] + g * cur[i + 2];
    }
    cur = next;
    ++p;
  }
  out.value = cur.back();
  out.tail_bound = cur.size() > 1 ? std::abs(cur.back() - cur.front())
                                  : std::abs(cur.back() - vals.back());
  out.tail_bound = std::max(out.tail_bound, 1e-12);
  out.terms_used = static_cast<long>(vals.size());
  return out;
}

}  // namespace stieltjes::series
