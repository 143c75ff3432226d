#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "ffalg/monomial.hpp"
#include "ffalg/rational.hpp"

namespace ffalg {

template <class C>
class SparsePoly;

inline bool coeff_zero(const Rational& q) { return sgn(q) == 0; }
template <class C>
bool coeff_zero(const SparsePoly<C>& p);

// Sparse multivariate Laurent polynomial over a commutative ring C.
// Terms are kept in graded-lex order and never store a zero coefficient.
template <class C>
class SparsePoly {
 public:
  using Map = std::map<Monomial, C, GradedLex>;
  using const_iterator = typename Map::const_iterator;

  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const C& c) {
    SparsePoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static SparsePoly term(const Monomial& m, const C& c) {
    SparsePoly p(m.size());
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.size() != nvars_) throw std::invalid_argument("polynomial: exponent length mismatch");
    if (coeff_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_zero(it->second)) terms_.erase(it);
    }
  }

  void sub_term(const Monomial& m, const C& c) {
    if (m.size() != nvars_) throw std::invalid_argument("polynomial: exponent length mismatch");
    if (coeff_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (coeff_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) sub_term(m, c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  friend SparsePoly operator*(const SparsePoly& a, const C& s) { return a.scaled(s); }
  friend SparsePoly operator*(const C& s, const SparsePoly& a) { return a.scaled(s); }

  // Coefficientwise multiplication by a scalar of any type S with C * S -> C.
  template <class S>
  SparsePoly scaled(const S& s) const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      C v = c * s;
      if (!coeff_zero(v)) r.terms_.emplace_hint(r.terms_.end(), m, std::move(v));
    }
    return r;
  }

  // Multiplies every exponent vector by a fixed monomial.
  SparsePoly shifted(const Monomial& m) const {
    SparsePoly r(nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k * m, c);
    return r;
  }

  SparsePoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("polynomial: negative power");
    SparsePoly r = constant(nvars_, one_like());
    SparsePoly b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  // Inserts a term whose monomial is known not to be present.
  void emplace_new(const Monomial& m, C c) { terms_.emplace(m, std::move(c)); }

 private:
  void check(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial: variable count mismatch");
  }
  C one_like() const;

  int nvars_ = 0;
  Map terms_;
};

template <class C>
bool coeff_zero(const SparsePoly<C>& p) {
  return p.is_zero();
}

using LaurentPoly = SparsePoly<Rational>;
// Polynomial in X-variables whose coefficients are Laurent polynomials in x.
using XPoly = SparsePoly<LaurentPoly>;

template <>
inline Rational SparsePoly<Rational>::one_like() const {
  return Rational(1);
}
template <>
inline LaurentPoly SparsePoly<LaurentPoly>::one_like() const {
  if (terms_.empty()) throw std::invalid_argument("polynomial: power of an empty coefficient-free value");
  return LaurentPoly::constant(terms_.begin()->second.nvars(), Rational(1));
}

}  // namespace ffalg
