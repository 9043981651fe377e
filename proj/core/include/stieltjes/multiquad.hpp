#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stieltjes/kernels.hpp"
#include "stieltjes/quad.hpp"

// Multidimensional integration by iterated 1-D quadrature over boxes (n <= 3)
// and the ordered simplex 0 < x_1 < ... < x_n < 1, plus a triangle-doubling
// wrapper for symmetric divided-difference double integrals.
//
// Removable diagonal singularities must be pre-wrapped through the kernels
// module; multiquad never special-cases the diagonal itself.

namespace stieltjes::multiquad {

struct Axis {
  double a = 0.0;
  double b = 1.0;
  bool upper_infinite = false;  // [a, inf): exp-sinh rule
  bool singular_a = false;      // endpoint singularity: tanh-sinh rule
  bool singular_b = false;
};

struct BoxSpec {
  std::vector<Axis> axes;        // axes[0] is the outermost
  long budget = 2000000;         // total integrand-evaluation budget
};

using NAryFn = std::function<double(std::span<const double>)>;

// Iterated adaptive integration, innermost axis first; each inner level is
// integrated to a tolerance 4x tighter than the one above it.
QuadResult integrate_box(const NAryFn& f, const BoxSpec& box, double tol);

// Integral over 0 < x_1 < ... < x_n < 1 with variable upper limits and the
// double-exponential rule on every axis (the innermost integrands of
// interest are singular at 1).
QuadResult integrate_simplex_ordered(const NAryFn& f, int n, double tol,
                                     long budget = 2000000);

// 2 * integral over the a < theta1 < theta2 < b triangle of
// DD2(F; H(theta1), H(theta2)); H must be strictly monotone on [a, b] so
// the kernel's only singularity is the (removable) diagonal.
QuadResult symmetric_double_integral(const Fn1D& F, const Fn1D& H, double a, double b,
                                     double tol, const kernels::DDConfig& cfg = {},
                                     bool swap_axes = false);

}  // namespace stieltjes::multiquad
