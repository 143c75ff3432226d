#include "ffalg/const_scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ffalg {

Gaussian Gaussian::inverse() const {
  Rational norm = re * re + im * im;
  if (ffalg::is_zero(norm)) throw std::domain_error("Gaussian: division by zero");
  return {re / norm, -im / norm};
}

ConstScalar::ConstScalar(const Rational& c) { add({0, 0}, {c, Rational(0)}); }

ConstScalar::ConstScalar(const Gaussian& g, int pi_power, int zeta_power) { add({pi_power, zeta_power}, g); }

ConstScalar ConstScalar::i() { return ConstScalar({Rational(0), Rational(1)}, 0, 0); }
ConstScalar ConstScalar::pi() { return ConstScalar({Rational(1), Rational(0)}, 1, 0); }
ConstScalar ConstScalar::zeta0() { return ConstScalar({Rational(1), Rational(0)}, 0, 1); }

void ConstScalar::add(const Key& k, const Gaussian& g) {
  if (g.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, g);
    return;
  }
  it->second = it->second + g;
  if (it->second.is_zero()) terms_.erase(it);
}

ConstScalar& ConstScalar::operator+=(const ConstScalar& o) {
  for (const auto& [k, g] : o.terms_) add(k, g);
  return *this;
}

ConstScalar& ConstScalar::operator-=(const ConstScalar& o) {
  for (const auto& [k, g] : o.terms_) add(k, -g);
  return *this;
}

ConstScalar ConstScalar::operator-() const {
  ConstScalar r;
  for (const auto& [k, g] : terms_) r.terms_.emplace(k, -g);
  return r;
}

ConstScalar ConstScalar::operator*(const ConstScalar& o) const {
  ConstScalar r;
  for (const auto& [a, ga] : terms_)
    for (const auto& [b, gb] : o.terms_) r.add({a.first + b.first, a.second + b.second}, ga * gb);
  return r;
}

ConstScalar ConstScalar::operator*(const Rational& c) const {
  return *this * ConstScalar(c);
}

ConstScalar ConstScalar::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("ConstScalar: only monomials are invertible");
  const auto& [k, g] = *terms_.begin();
  return ConstScalar(g.inverse(), -k.first, -k.second);
}

ConstScalar ConstScalar::pow(int k) const {
  ConstScalar base = k < 0 ? inverse() : *this;
  ConstScalar r = one();
  for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

std::complex<double> ConstScalar::evaluate(double pi_value, double zeta0_value) const {
  std::complex<double> s = 0;
  for (const auto& [k, g] : terms_)
    s += std::complex<double>(g.re.get_d(), g.im.get_d()) * std::pow(pi_value, k.first) * std::pow(zeta0_value, k.second);
  return s;
}

std::string ConstScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, g] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << ffalg::to_string(g.re);
    if (!ffalg::is_zero(g.im)) os << (g.im < 0 ? " - " : " + ") << ffalg::to_string(abs(g.im)) << "i";
    os << ")";
    if (k.first) os << "*pi^" << k.first;
    if (k.second) os << "*zeta0^" << k.second;
  }
  return os.str();
}

}  // namespace ffalg
