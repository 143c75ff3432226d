#pragma once

#include <complex>

namespace ffalg {

using Complex = std::complex<double>;

constexpr double kEulerGamma = 0.57721566490153286061;

// Principal-branch log Gamma (cut along the negative real axis), via upward
// recurrence and the Stirling series.
Complex log_gamma(Complex z);
Complex gamma(Complex z);
// 1/Gamma(z), entire; exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

// Real digamma for x > 0.
double digamma(double x);
// Hurwitz zeta(s, a) for real s > 1, a > 0.
double hurwitz_zeta(double s, double a);
// psi^(k)(x) for k >= 1, x > 0.
double polygamma(int k, double x);

}  // namespace ffalg
