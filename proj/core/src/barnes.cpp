#include "ffalg/barnes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ffalg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
constexpr Complex kI(0, 1);

void check_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error(std::string(what) + ": non-finite argument");
}

// Distance from z to the nearest point -(m omega1 + n omega2), m, n >= 0.
double lattice_distance(Complex z, const Gamma2Config& cfg) {
  double best = std::numeric_limits<double>::infinity();
  const double target = -z.real();
  for (int m = 0; m * cfg.omega1 <= std::max(target, 0.0) + cfg.omega1; ++m) {
    double rest = target - m * cfg.omega1;
    int n0 = std::max(0, static_cast<int>(std::floor(rest / cfg.omega2)));
    for (int n = std::max(0, n0 - 1); n <= n0 + 1; ++n)
      best = std::min(best, std::abs(z + Complex(m * cfg.omega1 + n * cfg.omega2, 0)));
  }
  return best;
}

// Sum over m >= N of R(rho m), R(x) = -sum_{k>=3} (-y)^k/k zeta(k, x), by
// Euler-Maclaurin in m. Returns the value and the size of the last correction.
Complex row_tail(Complex y, double rho, int N, double* estimate) {
  const double x = rho * N;
  std::vector<Complex> c;  // c[k] = (-y)^k / k
  Complex pw = -y * -y;
  c.assign(3, 0);
  for (int k = 3; k < 200; ++k) {
    pw *= -y;
    c.push_back(pw / static_cast<double>(k));
    if (std::abs(pw) * std::pow(x, 1.0 - k) < 1e-18) break;
  }
  const int K = static_cast<int>(c.size());
  Complex integral = 0, value = 0;
  for (int k = 3; k < K; ++k) {
    integral -= c[k] * hurwitz_zeta(k - 1, x) / ((k - 1) * rho);
    value -= c[k] * hurwitz_zeta(k, x);
  }
  Complex total = integral + 0.5 * value;
  // f^{(q)}(N) = -sum_k c_k rho^q (-1)^q (k)_q zeta(k + q, rho N)
  double fact = 2, last = 0;
  for (int p = 1; p <= 6; ++p) {
    const int q = 2 * p - 1;
    Complex deriv = 0;
    for (int k = 3; k < K; ++k) {
      double rising = 1;
      for (int j = 0; j < q; ++j) rising *= k + j;
      deriv -= c[k] * std::pow(rho, q) * (q % 2 ? -1.0 : 1.0) * rising * hurwitz_zeta(k + q, x);
    }
    Complex corr = kBernoulli[p - 1] / fact * deriv;
    total -= corr;
    last = std::abs(corr);
    fact *= (2.0 * p + 1) * (2.0 * p + 2);
  }
  if (estimate) *estimate = last;
  return total;
}

// log Gamma_2^{-1}(z) - log z.
Complex regular_part(Complex z, const Gamma2Config& cfg, double* estimate) {
  validate(cfg);
  GammaConstants g = gamma_constants(cfg);
  const Complex y = z / cfg.omega2;
  const double rho = cfg.omega1 / cfg.omega2;
  if (rho * cfg.N < 2 * std::abs(y) + 10)
    throw std::domain_error("log_gamma2: truncation N too small for |z|; increase N");
  Complex total = z * g.gamma22 + z * z * g.gamma21 / 2.0;
  total += -log_gamma(1.0 + y) - kEulerGamma * y + kPi * kPi / 12 * y * y;
  for (int m = 1; m < cfg.N; ++m) {
    const double x = m * rho;
    total += std::lgamma(x) - log_gamma(x + y) + y * digamma(x) + y * y / 2.0 * polygamma(1, x);
  }
  double tail_est = 0;
  total += row_tail(y, rho, cfg.N, &tail_est);
  if (estimate) *estimate = tail_est + g.tail_estimate * (std::abs(z) + std::norm(z));
  return total;
}

}  // namespace

void validate(const Gamma2Config& cfg) {
  if (!(cfg.omega1 > 0) || !(cfg.omega2 > 0) || !std::isfinite(cfg.omega1) || !std::isfinite(cfg.omega2))
    throw std::invalid_argument("Gamma2Config: periods must be positive and finite");
  if (cfg.N < 8) throw std::invalid_argument("Gamma2Config: N must be at least 8");
  if (!(cfg.tol > 0)) throw std::invalid_argument("Gamma2Config: tol must be positive");
}

GammaConstants gamma_constants(const Gamma2Config& cfg) {
  validate(cfg);
  const double w1 = cfg.omega1, w2 = cfg.omega2, s = w2 / w1, g = kEulerGamma;
  double s1 = 0, s2 = 0;
  for (int n = 1; n <= cfg.N; ++n) {
    const double x = n * s;
    s1 += digamma(x) - std::log(x) + 1 / (2 * x);
    s2 += polygamma(1, x) - 1 / x;
  }
  // Tails from the asymptotic expansions of psi and psi'.
  double last1 = 0, last2 = 0;
  s2 += 0.5 * std::pow(s, -2) * hurwitz_zeta(2, cfg.N + 1);
  for (int k = 1; k <= 5; ++k) {
    const double b = kBernoulli[k - 1];
    last1 = -b / (2 * k) * std::pow(s, -2 * k) * hurwitz_zeta(2 * k, cfg.N + 1);
    last2 = b * std::pow(s, -2 * k - 1) * hurwitz_zeta(2 * k + 1, cfg.N + 1);
    s1 += last1;
    s2 += last2;
  }
  GammaConstants out;
  const double minus22 = s1 / w1 + 0.5 * (1 / w1 + 1 / w2) * std::log(w1) - (g - std::log(2 * kPi)) / (2 * w1) +
                         (w1 - w2) / (2 * w1 * w2) * std::log(w2 / w1) - g / 2 * (1 / w1 + 1 / w2);
  const double minus21 = s2 / (w1 * w1) + kPi * kPi / (6 * w1 * w1) - std::log(w2) / (w1 * w2) + g / (w1 * w2);
  out.gamma22 = -minus22;
  out.gamma21 = -minus21;
  out.tail_estimate = std::abs(last1) / w1 + std::abs(last2) / (w1 * w1);
  return out;
}

Complex log_gamma2_inv(Complex z, const Gamma2Config& cfg) {
  check_finite(z, "log_gamma2");
  validate(cfg);
  if (lattice_distance(z, cfg) < cfg.tol) throw std::domain_error("log_gamma2: too close to a pole of Gamma_2");
  double est = 0;
  Complex v = std::log(z) + regular_part(z, cfg, &est);
  if (est > cfg.tol) throw std::domain_error("log_gamma2: tolerance unreachable at the configured N");
  return v;
}

Complex log_gamma2(Complex z, const Gamma2Config& cfg) { return -log_gamma2_inv(z, cfg); }

Complex gamma2_inv(Complex z, const Gamma2Config& cfg) {
  check_finite(z, "gamma2_inv");
  validate(cfg);
  if (std::abs(z) < cfg.tol) return z * std::exp(regular_part(z, cfg, nullptr));
  if (lattice_distance(z, cfg) == 0) return 0;
  return std::exp(log_gamma2_inv(z, cfg));
}

double log_gamma2_tail_estimate(Complex z, const Gamma2Config& cfg) {
  double est = 0;
  regular_part(z, cfg, &est);
  return est;
}

Complex zeta_min(Complex beta, const Gamma2Config& cfg) {
  check_finite(beta, "zeta_min");
  Gamma2Config c = cfg;
  c.omega1 = c.omega2 = 2 * kPi;
  const Complex ib = kI * beta;
  Complex num = gamma2_inv(ib, c) * gamma2_inv(-ib + 2 * kPi, c);
  Complex den = gamma2_inv(ib + kPi, c) * gamma2_inv(-ib + 3 * kPi, c);
  if (std::abs(den) == 0) throw std::domain_error("zeta_min: pole");
  return num / den;
}

Complex zeta0(const Gamma2Config& cfg) { return zeta_min(Complex(0, -kPi), cfg); }

Complex s_matrix_scalar(Complex beta) {
  const Complex tpi = 2 * kPi * kI;
  return gamma((kPi * kI + beta) / tpi) * gamma(-beta / tpi) / (gamma((kPi * kI - beta) / tpi) * gamma(beta / tpi));
}

ZetaResiduals zeta_residuals(Complex beta, const Gamma2Config& cfg) {
  ZetaResiduals r;
  const Complex pi_i(0, kPi);
  r.reflection = std::abs(zeta_min(beta - 2.0 * pi_i, cfg) - zeta_min(-beta, cfg));
  Complex rhs = std::pow(2 * kPi, 1.5) * rgamma((-kI * beta + kPi) / (2 * kPi)) * rgamma(kI * beta / (2 * kPi));
  r.product = std::abs(zeta_min(beta, cfg) * zeta_min(beta - pi_i, cfg) - rhs);
  r.ratio = std::abs(zeta_min(-beta, cfg) / zeta_min(beta, cfg) - s_matrix_scalar(beta));
  return r;
}

double difference_equation_residual(Complex z, const Gamma2Config& cfg) {
  Complex ratio = std::exp(log_gamma2_inv(z, cfg) - log_gamma2_inv(z + cfg.omega1, cfg));
  Complex rhs = std::sqrt(2 * kPi) * std::exp((-z / cfg.omega2 + 0.5) * std::log(cfg.omega2)) *
                rgamma(z / cfg.omega2);
  return std::abs(ratio - rhs);
}

Complex numeric_instantiate(const ConstScalar& s, const Gamma2Config& cfg) {
  Complex z0 = zeta0(cfg);
  Complex total = 0;
  for (const auto& [k, g] : s.terms()) {
    Complex v(g.re.get_d(), g.im.get_d());
    v *= std::pow(kPi, k.first) * std::pow(z0, k.second);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::overflow_error("numeric_instantiate: overflow");
    total += v;
  }
  return total;
}

}  // namespace ffalg
