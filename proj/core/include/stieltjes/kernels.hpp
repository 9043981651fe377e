#pragma once

#include <span>

#include "stieltjes/quad.hpp"

// Stable evaluation of divided-difference kernels: the two-point kernel
// (F(u)-F(v))/(u-v) with a confluent fallback, general n-point Newton
// divided differences, and the symmetric Stieltjes kernel
//   F_{n+1}(x_1..x_n) = sum_i x_i^{n-1} fhat(x_i) / prod_{j!=i} (x_i - x_j),
// which equals the order-(n-1) divided difference of g(x) = x^{n-1} fhat(x).
//
// The partial-fraction sum is never formed near coincident nodes; clusters
// are spread symmetrically to delta-scale separation and the O(delta) bias
// is removed by a Richardson combination across delta and delta/2.

namespace stieltjes::kernels {

struct DDConfig {
  // confluence threshold, relative to max(1, |u|, |v|)
  double delta = 1e-6;
  // prefer the analytic derivative at confluent nodes when the function
  // carries one; otherwise a 4th-order central difference with step delta
  bool analytic_derivative = true;
};

// (F(u) - F(v)) / (u - v), switching to F'((u+v)/2) when |u - v| falls
// below delta * max(1, |u|, |v|).
double divided_difference2(const Fn1D& F, double u, double v, const DDConfig& cfg = {});

// Order-(n-1) Newton divided difference of g at the given nodes (n >= 1).
double newton_dd(const Fn1D& g, std::span<const double> nodes, const DDConfig& cfg = {});

// Divided difference of g(x) = x^{n-1} fhat(x) at n >= 2 nodes; invariant
// under node permutation by construction.
double stieltjes_kernel(const Fn1D& fhat, std::span<const double> nodes,
                        const DDConfig& cfg = {});

}  // namespace stieltjes::kernels
