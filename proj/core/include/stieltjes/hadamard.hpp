#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "stieltjes/quad.hpp"

// Hadamard-product contour representations: the circle-average form of the
// symmetric double integral and the generating function
//   G(z) = (int_alpha^beta dtheta / (1 - z H(theta)))^2 = sum_n B_n z^n,
// whose coefficients are the Cauchy products B_n = sum_k A_k A_{n-k} of the
// moments A_k = int H^k. For H = cos on [0, pi/2] the closed form is
//   G(w) = arccos(-w)^2 / (1 - w^2),
// the square of the Wallis-moment series sum_k W_k w^k = arccos(-w)/sqrt(1-w^2).
//
// Principal branches everywhere; a discontinuity guard turns silent branch
// jumps in contour integrands into errors.

namespace stieltjes::hadamard {

// Thrown when a contour integrand shows a discontinuity between adjacent
// trapezoid nodes (a silent branch jump).
class BranchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F(z) = sum_n coeff(n) z^n on the closed unit disk.
struct PowerSeriesFn {
  std::function<double(long)> coeff;
  long max_degree = -1;  // >= 0: polynomial cutoff; -1: sum until negligible

  std::complex<double> eval(std::complex<double> z) const;

  static PowerSeriesFn log1p();                       // F(w) = log(1+w)
  static PowerSeriesFn monomial(long k);              // F(w) = w^k
  static PowerSeriesFn geometric(double a);           // F(w) = sum a^n w^n, n >= 1
  static PowerSeriesFn polynomial(std::vector<double> coeffs);
};

// Generating function G with coefficient access.
struct GeneratingFn {
  std::function<std::complex<double>(std::complex<double>)> eval;
  std::function<double(long)> coefficient;  // B_n
  double alpha = 0.0;
  double beta = 0.0;  // G(0) = (beta - alpha)^2

  // H = cos on [0, pi/2]: closed-form eval, Wallis-convolution coefficients.
  static GeneratingFn cosine();
  // coefficient-defined G; eval by direct summation on |z| < 1
  static GeneratingFn from_coefficients(std::function<double(long)> b, long max_degree = -1);
  // numeric G from H on [alpha, beta]; eval restricted to real z with
  // |z| max|H| < 1, coefficients by contour extraction at radius 1/2
  static GeneratingFn from_h(const Fn1D& h, double a, double b, double tol = 1e-10);
};

// G(w) = (arccos(-w))^2 / (1 - w^2) for |w| < 1; throws std::domain_error
// outside the open disk.
std::complex<double> arccos_gf(std::complex<double> w);

// Exponent-sign variants of the contour kernel argument: `conjugate` pairs
// F(sqrt(z) e^{i theta}) with the kernel at w = sqrt(z) e^{-i theta} (the
// Hadamard pairing); `plain` uses w = sqrt(z) e^{+i theta}.
enum class ContourVariant { conjugate, plain };

// Single-contour form of the [0, pi/2]^2 cosine divided-difference double
// integral of F(z cos theta):
//   (1/2pi) int_0^2pi F(sqrt(z) e^{i theta}) w G(w) dtheta,  w per variant.
// The imaginary part must vanish to 1e-8; it is discarded with a warning
// above that. Requires 0 < z < 1.
double double_integral_via_contour(const PowerSeriesFn& F, double z, double tol,
                                   ContourVariant variant = ContourVariant::conjugate);

// Hadamard product against a generating function:
//   (1/2pi) int F(sqrt(z) e^{i theta}) sqrt(z) e^{-i theta} G(sqrt(z) e^{-i theta}) dtheta
//     = sum_{n>=1} F_n B_{n-1} z^n.
double hadamard_product(const PowerSeriesFn& F, const GeneratingFn& G, double z, double tol);

}  // namespace stieltjes::hadamard
