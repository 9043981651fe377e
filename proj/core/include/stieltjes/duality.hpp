#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stieltjes/multiquad.hpp"
#include "stieltjes/quad.hpp"

// The Stieltjes-transform duality framework: a catalog of weight functions f
// with their hat transforms fhat(z) = integral f(x)/(1+xz) dx, a numeric hat
// transform, and the n-variate <-> univariate duality verifier
//
//   int_{dom^n} Fhat_{n+1}(x_1..x_n) prod_i f_i(x_i) dx
//     = int_dom f_{n+1}(x) prod_i fhat_i(x) dx,
//
// where Fhat_{n+1} is the symmetric divided-difference kernel of
// x^{n-1} fhat_{n+1}(x). Includes the cosine- and tangent-kernel
// specializations and the J_n = int_0^{pi/2} z^n / sin^{n-1} z dz family.

namespace stieltjes::duality {

struct StieltjesPair {
  std::string name;
  Fn1D f;                            // weight, possibly on [a, inf)
  std::optional<Fn1D> fhat_closed;   // closed-form hat transform on [0, 1]
  std::string notes;
};

// The cataloged pairs: arcsine01, arcsine_full, sec_branch, cauchy, uniform01.
const std::vector<StieltjesPair>& pair_catalog();
const StieltjesPair& pair_by_name(const std::string& name);

// Quadrature of f(x)/(1+xz) over the domain of f. Throws std::domain_error
// if the pole -1/z lies inside the domain.
QuadResult hat_transform_numeric(const StieltjesPair& p, double z, double tol = 1e-9);

// Hat transform as a function: the closed form when available, otherwise
// the numeric fallback.
Fn1D hat_fn(const StieltjesPair& p, double tol = 1e-9);

struct DualityRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  long n_evals = 0;
  bool converged = false;
};

// Checks the duality identity for pairs f_1..f_{n+1} (n = pairs.size() - 1,
// n in {2, 3}); both sides are integrated numerically to `tol`.
DualityRecord verify_duality(std::span<const StieltjesPair* const> pairs, double tol);

// Left side of the cosine specialization: the symmetric kernel of
// g(x) = x^{n-2} log(1+x) at nodes cos(theta_i), integrated over
// [0, pi/2]^n. Equals J_n.
QuadResult multivariate_lhs_cos(int n, double tol, long budget = 2000000);

// J_n by double-exponential quadrature on [0, pi/2].
QuadResult j_n(int n, double tol = 1e-12);

// Both sides of the tangent specialization: LHS over [0, inf)^n after
// x = tan(theta), RHS = int_0^1 (pi/2 + z log z)^n / (1+z^2)^n dz.
struct TanRecord {
  QuadResult lhs;
  QuadResult rhs;
};
TanRecord multivariate_lhs_tan(int n, double tol, long budget = 2000000);

// The right side alone.
QuadResult tan_rhs(int n, double tol);

}  // namespace stieltjes::duality
