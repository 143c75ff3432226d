#pragma once

#include <numbers>

#include "ffalg/const_scalar.hpp"
#include "ffalg/special.hpp"

namespace ffalg {

struct Gamma2Config {
  double omega1 = 2 * std::numbers::pi;
  double omega2 = 2 * std::numbers::pi;
  int N = 200;        // lattice rows summed exactly
  double tol = 1e-6;  // target accuracy and pole-proximity radius
};

// Validates the configuration; throws std::invalid_argument.
void validate(const Gamma2Config& cfg);

struct GammaConstants {
  double gamma22 = 0;
  double gamma21 = 0;
  double tail_estimate = 0;  // size of the last asymptotic tail term used
};

GammaConstants gamma_constants(const Gamma2Config& cfg);

// log of Gamma_2(z|omega)^{-1}; throws std::domain_error within cfg.tol of a
// zero of Gamma_2^{-1} (z = -(m omega1 + n omega2), m, n >= 0).
Complex log_gamma2_inv(Complex z, const Gamma2Config& cfg = {});
Complex log_gamma2(Complex z, const Gamma2Config& cfg = {});
// Gamma_2^{-1} itself, entire; exact zero at z = 0.
Complex gamma2_inv(Complex z, const Gamma2Config& cfg = {});
// Estimated truncation error of log_gamma2_inv at z for the configuration.
double log_gamma2_tail_estimate(Complex z, const Gamma2Config& cfg = {});

// Minimal form factor built from Gamma_2(z) = Gamma_2(z | 2pi, 2pi); only N
// and tol are taken from cfg.
Complex zeta_min(Complex beta, const Gamma2Config& cfg = {});
// zeta(-pi i).
Complex zeta0(const Gamma2Config& cfg = {});

// Scalar factor S_0(beta) of the two-particle S-matrix.
Complex s_matrix_scalar(Complex beta);

struct ZetaResiduals {
  double reflection = 0;  // |zeta(beta - 2 pi i) - zeta(-beta)|
  double product = 0;     // |zeta(beta) zeta(beta - pi i) - (2pi)^{3/2} / (Gamma((pi - i beta)/2pi) Gamma(i beta/2pi))|
  double ratio = 0;       // |zeta(-beta)/zeta(beta) - S_0(beta)|
};
ZetaResiduals zeta_residuals(Complex beta, const Gamma2Config& cfg = {});

// |Gamma_2(z + omega1)/Gamma_2(z) - sqrt(2 pi) omega2^{1/2 - z/omega2} / Gamma(z/omega2)|.
double difference_equation_residual(Complex z, const Gamma2Config& cfg = {});

// Substitutes pi and zeta0() into a symbolic constant.
Complex numeric_instantiate(const ConstScalar& s, const Gamma2Config& cfg = {});

}  // namespace ffalg
