#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>

#include "ffalg/barnes.hpp"
#include "ffalg/tower.hpp"

using namespace ffalg;
using std::numbers::pi;

namespace {

Gamma2Config omegas(double w1, double w2, int N = 200) {
  Gamma2Config c;
  c.omega1 = w1;
  c.omega2 = w2;
  c.N = N;
  return c;
}

// Truncated regularized double product over 0 <= m, n < L.
Complex naive_log_gamma2_inv(Complex z, double w1, double w2, int L) {
  GammaConstants g = gamma_constants(omegas(w1, w2));
  Complex s = std::log(z) + z * g.gamma22 + z * z * g.gamma21 / 2.0;
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n) {
      if (!m && !n) continue;
      double W = m * w1 + n * w2;
      Complex u = z / W;
      s += std::log(1.0 + u) - u + u * u / 2.0;
    }
  return s;
}

}  // namespace

TEST_CASE("real special functions against Boost.Math") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 31.0, 200.0}) {
    CAPTURE(x);
    CHECK(digamma(x) == doctest::Approx(boost::math::digamma(x)).epsilon(1e-13));
    for (int k = 1; k <= 4; ++k)
      CHECK(polygamma(k, x) == doctest::Approx(boost::math::polygamma(k, x)).epsilon(1e-12));
    CHECK(log_gamma(Complex(x, 0)).real() == doctest::Approx(boost::math::lgamma(x)).epsilon(1e-13));
  }
  for (double s : {2.0, 3.0, 4.5})
    CHECK(hurwitz_zeta(s, 1.0) == doctest::Approx(boost::math::zeta(s)).epsilon(1e-13));
  CHECK(hurwitz_zeta(2.0, 2.0) == doctest::Approx(pi * pi / 6 - 1).epsilon(1e-13));
}

TEST_CASE("complex log gamma") {
  // reference values from a 30-digit evaluation
  struct Ref {
    Complex z, v;
  } refs[] = {
      {{0.3, 0.2}, {0.8894083505732667354, -0.62026100688248293096}},
      {{-2.5, 0.7}, {-1.4941873089113575064, -8.6464756828033773445}},
      {{7.1, -3.0}, {6.1082785224013589134, -5.7610466721371092801}},
  };
  for (const auto& r : refs) {
    Complex v = log_gamma(r.z);
    CHECK(std::abs(v - r.v) < 1e-12);
  }
  CHECK(std::abs(gamma(Complex(5, 0)) - 24.0) < 1e-11);
  CHECK(rgamma(Complex(-3, 0)) == Complex(0, 0));
  CHECK(rgamma(Complex(0, 0)) == Complex(0, 0));
  Complex z(0.4, 1.1);
  CHECK(std::abs(gamma(z) * gamma(1.0 - z) - pi / std::sin(pi * z)) < 1e-12);
}

TEST_CASE("gamma constants") {
  GammaConstants g = gamma_constants(omegas(2 * pi, 2 * pi));
  CHECK(g.gamma22 == doctest::Approx(-0.28021796516107260273).epsilon(1e-11));
  CHECK(g.gamma21 == doctest::Approx(-0.035064036234006111055).epsilon(1e-11));
  GammaConstants h = gamma_constants(omegas(2 * pi, 3.0));
  CHECK(h.gamma22 == doctest::Approx(-0.26384552511736777219).epsilon(1e-11));
  CHECK(h.gamma21 == doctest::Approx(-0.13906312662333671739).epsilon(1e-11));
  CHECK(std::abs(h.tail_estimate) < 1e-6);
}

TEST_CASE("log Gamma2 inverse against reference values") {
  struct Ref {
    double w2;
    Complex z, v;
  } refs[] = {
      {2 * pi, {0.5, 0}, {-0.83718257006127848043, 0}},
      {2 * pi, {1.3, 0.2}, {-0.11213274964592110984, 0.090807745195901713536}},
      {2 * pi, {2.5, -1}, {0.22697376837903433934, -0.065797329867380056955}},
      {3.0, {0.5, 0}, {-0.84038697248925043492, 0}},
      {3.0, {1.3, 0.2}, {-0.15353633558582791849, 0.077510340245702316738}},
      {3.0, {2.5, -1}, {0.090831357158866459333, 0.024456900259769338807}},
  };
  for (const auto& r : refs) {
    Complex v = log_gamma2_inv(r.z, omegas(2 * pi, r.w2));
    CAPTURE(r.z);
    CHECK(std::abs(v - r.v) < 1e-9);
  }
}

TEST_CASE("log Gamma2 inverse against the naive double product") {
  const Complex z(0.5, 0.3);
  Complex a = naive_log_gamma2_inv(z, 2 * pi, 2 * pi, 200);
  Complex b = naive_log_gamma2_inv(z, 2 * pi, 2 * pi, 400);
  Complex v = log_gamma2_inv(z, omegas(2 * pi, 2 * pi));
  // The truncation error of the naive product decays like 1/L.
  CHECK(std::abs(v - b) < 2 * std::abs(b - a) + 1e-12);
  CHECK(std::abs(v - b) < 1e-4);
}

TEST_CASE("difference equation") {
  for (double w2 : {2 * pi, 3.0})
    for (Complex z : {Complex(1.3, 0.2), Complex(0.5, 0), Complex(2.5, -1), Complex(0.2, 1.5), Complex(4, 0.5)}) {
      CAPTURE(w2);
      CAPTURE(z);
      CHECK(difference_equation_residual(z, omegas(2 * pi, w2)) < 1e-6);
    }
}

TEST_CASE("symmetry in the periods") {
  for (Complex z : {Complex(1.3, 0.2), Complex(0.5, 0), Complex(2.5, -1)}) {
    Complex a = log_gamma2_inv(z, omegas(2 * pi, 3.0));
    Complex b = log_gamma2_inv(z, omegas(3.0, 2 * pi));
    CHECK(std::abs(a - b) < 1e-8);
  }
}

TEST_CASE("behaviour at the origin and near lattice points") {
  Gamma2Config cfg;
  CHECK(gamma2_inv(Complex(0, 0), cfg) == Complex(0, 0));
  Complex r1 = gamma2_inv(Complex(1e-3, 0), cfg) / 1e-3;
  Complex r2 = gamma2_inv(Complex(1e-5, 0), cfg) / 1e-5;
  CHECK(std::abs(r1 - r2) < 1e-2);
  CHECK(std::abs(r2 - 1.0) < 1e-4);
  CHECK_THROWS_AS(log_gamma2_inv(Complex(0, 0), cfg), std::domain_error);
  CHECK_THROWS_AS(log_gamma2_inv(Complex(-2 * pi + 1e-9, 0), cfg), std::domain_error);
  CHECK(std::abs(gamma2_inv(Complex(-2 * pi, 0), cfg)) < 1e-6);
  CHECK_NOTHROW(log_gamma2_inv(Complex(-pi, 0.5), cfg));
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(validate(omegas(-1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(omegas(1, 1, 2)), std::invalid_argument);
  Gamma2Config c;
  c.tol = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("truncation self-consistency") {
  for (Complex z : {Complex(2.5, 0), Complex(1.3, 0.2), Complex(0.7, -2)}) {
    Complex a = log_gamma2_inv(z, omegas(2 * pi, 2 * pi, 200));
    Complex b = log_gamma2_inv(z, omegas(2 * pi, 2 * pi, 400));
    CHECK(std::abs(a - b) < 1e-6);
  }
  double prev = 1;
  for (int N : {25, 50, 100, 200}) {
    double e = log_gamma2_tail_estimate(Complex(2.5, 0), omegas(2 * pi, 2 * pi, N));
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("minimal form factor") {
  Complex z0 = zeta0();
  CHECK(z0.real() == doctest::Approx(1.44418000633417852770).epsilon(1e-9));
  CHECK(std::abs(z0.imag()) < 1e-9);
  Gamma2Config big;
  big.N = 400;
  CHECK(std::abs(zeta0(big) - z0) < 1e-6);
  CHECK(std::abs(zeta_min(Complex(0, 0))) < 1e-4);

  CHECK(std::abs(zeta_min(Complex(0.3, 0.1)) - Complex(-0.079712548143315556274, 0.30592109840291563739)) < 1e-9);
  CHECK(std::abs(zeta_min(Complex(0.7, 0)) - Complex(0.10259601983665141751, 0.67325963221573208425)) < 1e-9);

  for (Complex b : {Complex(0.3, 0.1), Complex(0.7, 0), Complex(0.5, 0), Complex(1.2, -0.4), Complex(-0.8, 0.3)}) {
    ZetaResiduals r = zeta_residuals(b);
    CAPTURE(b);
    CHECK(r.reflection < 1e-6);
    CHECK(r.product < 1e-6);
    CHECK(r.ratio < 1e-6);
  }
}

TEST_CASE("two-particle scalar factor") {
  for (double b : {0.3, 1.0, 2.5}) {
    Complex s = s_matrix_scalar(Complex(b, 0));
    CHECK(std::abs(s * s_matrix_scalar(Complex(-b, 0)) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(s) - 1.0) < 1e-12);
  }
}

TEST_CASE("numeric instantiation of symbolic constants") {
  CHECK(numeric_instantiate(ConstScalar::one()) == Complex(1, 0));
  Complex v = numeric_instantiate(ConstScalar::i() * ConstScalar::pi() * Rational(2));
  CHECK(std::abs(v - Complex(0, 2 * pi)) < 1e-15);
  ConstScalar diff = const_c(1, 0, 0, Chirality::Chiral) - const_d(1, 0, 0);
  CHECK(std::abs(numeric_instantiate(diff)) < 1e-10);
  Complex c2 = numeric_instantiate(const_c(1, 0, 0, Chirality::Chiral));
  CHECK(std::abs(c2 + 1.0 / (2 * pi * zeta0().real())) < 1e-12);
}
