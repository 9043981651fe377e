#pragma once

#include <complex>

// Special-function and constant kernel: Catalan's constant, integer zeta
// values, complex polylogarithms on the closed unit disk, the pentagamma
// function, and the principal-branch complex arccos.
//
// All operations are pure and reentrant.

namespace stieltjes::specfun {

// Full-double-precision constant literals. Each carries a test that
// recomputes it from an independent series.
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLog2 = 0.693147180559945309417232121458176568;
inline constexpr double kCatalan = 0.915965594177219015054603514932384110;
inline constexpr double kZeta3 = 1.202056903159594285399738161511449990;
inline constexpr double kZeta5 = 1.036927755143369926331365486457034168;
inline constexpr double kZeta2 = kPi * kPi / 6.0;
// Golden ratio phi = (1+sqrt5)/2 and its inverse (sqrt5-1)/2.
inline constexpr double kGolden = 1.618033988749894848204586834365638118;
inline constexpr double kGoldenInv = 0.618033988749894848204586834365638118;

double catalan();

// Riemann zeta at integer n >= 2. Throws std::domain_error for n < 2.
double zeta(int n);

// Li_n(z) = sum_{k>=1} z^k / k^n on the closed unit disk, principal branch
// conventions throughout. Requires |z| <= 1 + 1e-12 and, for n = 1, z != 1.
// Accurate to <= 1e-10 absolute in each component.
std::complex<double> polylog(int n, std::complex<double> z);

// Pentagamma psi'''(x) = 6 sum_{k>=0} 1/(x+k)^4 for x > 0.
double polygamma3(double x);

// Principal branch arccos(w) = -i log(w + i sqrt(1 - w^2)).
std::complex<double> complex_arccos(std::complex<double> w);

}  // namespace stieltjes::specfun
