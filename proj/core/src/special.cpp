#include "ffalg/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ffalg {

namespace {

// B_{2k} for k = 1..12.
constexpr double kBernoulli[] = {1.0 / 6,          -1.0 / 30,       1.0 / 42,          -1.0 / 30,
                                 5.0 / 66,         -691.0 / 2730,   7.0 / 6,           -3617.0 / 510,
                                 43867.0 / 798,    -174611.0 / 330, 854513.0 / 138,    -236364091.0 / 2730};

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("log_gamma: non-finite argument");
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
    throw std::domain_error("log_gamma: pole at a non-positive integer");
  Complex shift = 0;
  while (std::abs(z) < 15 || z.real() < 10) {
    shift += std::log(z);
    z += 1.0;
  }
  Complex inv = 1.0 / z, inv2 = inv * inv;
  Complex series = 0, pw = inv;
  for (int k = 1; k <= 10; ++k) {
    series += kBernoulli[k - 1] / ((2.0 * k) * (2.0 * k - 1)) * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * std::numbers::pi) + series - shift;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex rgamma(Complex z) {
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real())) return 0;
  return std::exp(-log_gamma(z));
}

double digamma(double x) {
  if (!(x > 0)) throw std::domain_error("digamma: argument must be positive");
  double acc = 0;
  while (x < 12) {
    acc -= 1 / x;
    x += 1;
  }
  double inv2 = 1 / (x * x), pw = inv2, s = 0;
  for (int k = 1; k <= 8; ++k) {
    s += kBernoulli[k - 1] / (2 * k) * pw;
    pw *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - s;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1)) throw std::domain_error("hurwitz_zeta: need s > 1");
  if (!(a > 0)) throw std::domain_error("hurwitz_zeta: need a > 0");
  const int M = 12;
  double sum = 0;
  for (int k = 0; k < M; ++k) sum += std::pow(a + k, -s);
  const double b = a + M;
  sum += std::pow(b, 1 - s) / (s - 1) + 0.5 * std::pow(b, -s);
  // Euler-Maclaurin corrections B_{2j}/(2j)! s(s+1)..(s+2j-2) b^{-s-2j+1}.
  double rising = s, fact = 2, pw = std::pow(b, -s - 1);
  for (int j = 1; j <= 12; ++j) {
    double term = kBernoulli[j - 1] / fact * rising * pw;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
    pw /= b * b;
  }
  return sum;
}

double polygamma(int k, double x) {
  if (k < 1) throw std::domain_error("polygamma: order must be at least 1");
  double f = std::tgamma(k + 1.0);
  return (k % 2 ? 1 : -1) * f * hurwitz_zeta(k + 1, x);
}

}  // namespace ffalg
