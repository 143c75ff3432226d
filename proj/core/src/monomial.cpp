#include "ffalg/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace ffalg {
namespace {

std::int16_t narrow(long v) {
  if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
    throw std::overflow_error("monomial exponent out of range");
  return static_cast<std::int16_t>(v);
}

void check_size(int n) {
  if (n < 0 || n > Monomial::kMaxVars) throw std::invalid_argument("monomial: too many variables");
}

}  // namespace

Monomial::Monomial(int nvars) {
  check_size(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exps) {
  check_size(static_cast<int>(exps.size()));
  n_ = static_cast<std::uint8_t>(exps.size());
  int i = 0;
  for (int v : exps) e_[i++] = narrow(v);
}

Monomial::Monomial(const std::vector<int>& exps) {
  check_size(static_cast<int>(exps.size()));
  n_ = static_cast<std::uint8_t>(exps.size());
  for (int i = 0; i < n_; ++i) e_[i] = narrow(exps[i]);
}

void Monomial::set(int i, int value) { e_[i] = narrow(value); }

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_constant() const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

bool Monomial::has_negative() const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] < 0) return true;
  return false;
}

std::vector<int> Monomial::to_vector() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

Monomial Monomial::operator*(const Monomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("monomial: variable count mismatch");
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.e_[i] = narrow(long(e_[i]) + o.e_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("monomial: variable count mismatch");
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.e_[i] = narrow(long(e_[i]) - o.e_[i]);
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.e_[i] = narrow(-long(e_[i]));
  return r;
}

Monomial Monomial::erase(int i) const {
  Monomial r(n_ - 1);
  for (int k = 0, j = 0; k < n_; ++k)
    if (k != i) r.e_[j++] = e_[k];
  return r;
}

Monomial Monomial::append(int value) const {
  Monomial r(n_ + 1);
  for (int k = 0; k < n_; ++k) r.e_[k] = e_[k];
  r.e_[n_] = narrow(value);
  return r;
}

Monomial Monomial::extended(int nvars) const {
  if (nvars < n_) throw std::invalid_argument("monomial: cannot shrink by extension");
  Monomial r(nvars);
  for (int k = 0; k < n_; ++k) r.e_[k] = e_[k];
  return r;
}

bool Monomial::operator==(const Monomial& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 1000003u ^ static_cast<std::uint16_t>(e_[i]);
  return h;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_less(a, b);
}

}  // namespace ffalg
