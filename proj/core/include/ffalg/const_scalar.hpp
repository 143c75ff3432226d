#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "ffalg/rational.hpp"

namespace ffalg {

struct Gaussian {
  Rational re, im;

  bool is_zero() const { return ffalg::is_zero(re) && ffalg::is_zero(im); }
  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator*(const Gaussian& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gaussian operator-() const { return {-re, -im}; }
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
  Gaussian inverse() const;
};

// Finite sum of g * pi^a * zeta0^b with Gaussian rational g. pi and zeta0 are
// treated as independent invertible symbols.
class ConstScalar {
 public:
  using Key = std::pair<int, int>;  // (power of pi, power of zeta0)

  ConstScalar() = default;
  explicit ConstScalar(const Rational& c);
  ConstScalar(const Gaussian& g, int pi_power, int zeta_power);

  static ConstScalar one() { return ConstScalar(Rational(1)); }
  static ConstScalar i();
  static ConstScalar pi();
  static ConstScalar zeta0();

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Gaussian>& terms() const { return terms_; }

  ConstScalar& operator+=(const ConstScalar& o);
  ConstScalar& operator-=(const ConstScalar& o);
  ConstScalar operator+(const ConstScalar& o) const { ConstScalar r(*this); return r += o; }
  ConstScalar operator-(const ConstScalar& o) const { ConstScalar r(*this); return r -= o; }
  ConstScalar operator-() const;
  ConstScalar operator*(const ConstScalar& o) const;
  ConstScalar operator*(const Rational& c) const;
  bool operator==(const ConstScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const ConstScalar& o) const { return !(*this == o); }

  // Only single-term elements are invertible; throws otherwise.
  ConstScalar inverse() const;
  ConstScalar operator/(const ConstScalar& o) const { return *this * o.inverse(); }
  // Integer power; negative exponents require invertibility.
  ConstScalar pow(int k) const;

  std::complex<double> evaluate(double pi_value, double zeta0_value) const;
  std::string to_string() const;

 private:
  void add(const Key& k, const Gaussian& g);
  std::map<Key, Gaussian> terms_;
};

}  // namespace ffalg
