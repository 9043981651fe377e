#pragma once

#include <functional>
#include <stdexcept>

// Nested and alternating series engine: Euler-transform acceleration of
// alternating sums, the tail of the divergent depth-3 nested sum, the
// alternating triple t-value, the E_k closed forms for the cosine
// divided-difference integrals, and the Fourier-coefficient evaluation of
// the general kernel integral.

namespace stieltjes::series {

struct SeriesResult {
  double value = 0.0;
  double tail_bound = 0.0;  // >= |first omitted term| for alternating outer sums
  long terms_used = 0;
};

class ContractError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Euler-transform (iterated averaging of partial sums, depth 8) accelerated
// sum of an eventually alternating series term(0) + term(1) + ...
// Throws ContractError if the terms fail to alternate past the first 50.
SeriesResult alternating_sum(const std::function<double(long)>& term, double tol,
                             long max_terms = 20000);

// sum_{k>=1} 1/(2k+1) sum_{l>=k+1} (-1)^{l+1} w_l sum_{m=0}^{l-1} 1/(2m+1)
// with w_l = 1/(2l), or w_l = 1/l when `doubled` is set. The outer sum runs
// to K_outer with an accelerated tail correction.
SeriesResult mzv_tail_triple(long k_outer, double tol, bool doubled = false);

// Depth-2 alternating value sum_{k>=1} (-1)^{k-1}/k sum_{n=0}^{k-1} (-1)^n/(2n+1).
SeriesResult mzv_depth2(double tol);

// sum_{k,l,m>=0} (-1)^{l+m} / ((2k+1)(2k+2l+2)(2k+2l+2m+3)), the absolutely
// reorganized form of the ordered odd-index triple sum.
SeriesResult t_value_triple(double tol);

// E_{2k} = 2 pi sum_{l=0}^{k-1} (-1)^l/(2l+1), k >= 1.
double e_even(int k);

// E_{2n+1} = pi^2/4 + 4 sum_{k=1}^{n} ((-1)^{k+1}/k) sum_{m=0}^{k-1} 1/(2m+1), n >= 0.
double e_odd(int n);

struct FourierCoefficients {
  std::function<double(long)> alpha;  // k >= 0
  long truncation = 100000;
  enum class Decay { geometric, harmonic } decay = Decay::geometric;
};

// sum_k alpha_k E_k, the double integral of the cosine-kernel with Fourier
// data alpha. Geometric data is summed directly; harmonic data through Abel
// averaging at radii r -> 1 with log-aware Richardson extrapolation.
SeriesResult fourier_double_integral(const FourierCoefficients& c, double tol);

}  // namespace stieltjes::series
