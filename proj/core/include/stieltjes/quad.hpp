#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

// One-dimensional integration engines: adaptive 15-point Gauss-Kronrod for
// smooth integrands, double-exponential (tanh-sinh) transformation for
// endpoint singularities with an exp-sinh variant for [a, inf), and a
// doubling trapezoid rule for smooth 2pi-periodic (contour) integrands.
//
// All engines are deterministic: a given integrand and tolerance always
// produce the same evaluation sequence and the same result.

namespace stieltjes {

// A real scalar function with its domain and singularity declarations.
// Declared-singular endpoints are never evaluated exactly; `derivative`
// is optional and used by divided-difference kernels at confluent nodes.
struct Fn1D {
  std::function<double(double)> eval;
  double a = 0.0;
  double b = 1.0;
  bool upper_infinite = false;  // domain [a, inf); `b` is ignored
  bool singular_a = false;
  bool singular_b = false;
  std::function<double(double)> derivative;

  double operator()(double x) const { return eval(x); }
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;     // conservative error estimate, >= 0
  long n_evals = 0;
  bool converged = false;   // implies err_est <= requested tolerance
};

struct ComplexQuadResult {
  std::complex<double> value{0.0, 0.0};
  double err_est = 0.0;
  long n_evals = 0;
  bool converged = false;
};

namespace quad {

// Thrown when an integrand produces a non-finite value; the message names
// the abscissa.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& msg, double abscissa)
      : std::runtime_error(msg), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

// Globally adaptive Gauss-Kronrod 15(7) with bisection of the
// worst-error subinterval. Absolute tolerance, with a relative fallback
// once |value| exceeds 1.
QuadResult integrate_adaptive(const Fn1D& f, double tol, long max_evals = 400000);

// Double-exponential rule; tanh-sinh on finite intervals, exp-sinh on
// [a, inf). Level-doubling until `tol` or `max_level`.
QuadResult integrate_de(const Fn1D& f, double tol, int max_level = 12);

// Equal-spaced trapezoid sum over [0, 2pi) with point doubling until two
// successive refinements differ by at most `tol`; spectrally accurate on
// smooth periodic integrands. Gives up (converged=false) at 2^16 points.
ComplexQuadResult integrate_periodic(const std::function<std::complex<double>(double)>& g,
                                     double tol, int initial_points = 16,
                                     int max_points = 1 << 16);

// One 15-point Kronrod panel over [a, b] together with the embedded
// 7-point Gauss value; exposed for the rule-exactness tests.
struct Panel {
  double kronrod;
  double gauss;
};
Panel gk15_panel(const std::function<double(double)>& f, double a, double b);

}  // namespace quad
}  // namespace stieltjes
