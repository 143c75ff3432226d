#include <stdexcept>

#include "ffalg/symring.hpp"

namespace ffalg {

struct SymContext::Cache {
  std::mutex mu;
  std::map<int, LaurentPoly> h, p;
  std::vector<LaurentPoly> bar_images, bar_inverses;
  bool bar_ready = false;
};

SymContext::SymContext(int n, SymBasis basis) : n_(n), basis_(basis), cache_(std::make_shared<Cache>()) {
  if (n < 0 || n > Monomial::kMaxVars) throw std::invalid_argument("SymContext: unsupported variable count");
}

LaurentPoly SymContext::e(int k) const {
  if (basis_ == SymBasis::Monomial) return elem_sym(k, n_);
  if (k == 0) return one();
  if (k < 0 || k > n_) return zero();
  return lp_var(n_, k - 1);
}

LaurentPoly SymContext::h(int k) const {
  if (k < 0) return zero();
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->h.find(k);
  if (it != cache_->h.end()) return it->second;
  LaurentPoly v = basis_ == SymBasis::Monomial ? complete_sym(k, n_) : complete_in_e(k, n_);
  cache_->h.emplace(k, v);
  return v;
}

LaurentPoly SymContext::p(int k) const {
  if (k == 0) throw std::invalid_argument("power sum p_0 is not defined");
  if (k < 0) return invert(p(-k));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->p.find(k);
  if (it != cache_->p.end()) return it->second;
  LaurentPoly v = basis_ == SymBasis::Monomial ? power_sum(k, n_) : power_sum_in_e(k, n_);
  cache_->p.emplace(k, v);
  return v;
}

LaurentPoly SymContext::invert(const LaurentPoly& f) const {
  if (basis_ == SymBasis::Monomial) return invert_vars(f);
  // e_k(1/x) = e_{n-k}(x) / e_n(x).
  LaurentPoly r(n_);
  for (const auto& [m, c] : f) {
    Monomial k(n_);
    int total = 0;
    for (int i = 0; i < n_; ++i) {
      int a = m[i];
      total += a;
      int target = n_ - (i + 1);  // e_{n-k}, index target-1; e_0 = 1
      if (target > 0) k.set(target - 1, k[target - 1] + a);
    }
    if (n_ > 0) k.set(n_ - 1, k[n_ - 1] - total);
    r.add_term(k, c);
  }
  return r;
}

LaurentPoly SymContext::bar(const LaurentPoly& f) const {
  if (n_ < 2) throw std::invalid_argument("bar: needs at least two variables");
  if (f.nvars() != n_) throw std::invalid_argument("bar: ring mismatch");
  if (basis_ == SymBasis::Monomial) return ffalg::bar(f);
  const int out = n_ - 1;  // e'_1..e'_{n-2}, x
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->bar_ready) {
      auto ep = [&](int j) {
        if (j == 0) return lp_const(out, Rational(1));
        if (j < 0 || j > n_ - 2) return LaurentPoly(out);
        return lp_var(out, j - 1);
      };
      LaurentPoly x2 = lp_var(out, out - 1, 2);
      cache_->bar_images.clear();
      for (int k = 1; k <= n_; ++k) cache_->bar_images.push_back(ep(k) - x2 * ep(k - 2));
      cache_->bar_inverses.assign(n_, LaurentPoly());
      // bar(e_n) = -x^2 e'_{n-2}.
      LaurentPoly inv = lp_var(out, out - 1, -2) * Rational(-1);
      if (n_ - 2 > 0) inv = inv * lp_var(out, n_ - 3, -1);
      cache_->bar_inverses[n_ - 1] = inv;
      cache_->bar_ready = true;
    }
  }
  return substitute(f, cache_->bar_images, cache_->bar_inverses, out);
}

LaurentPoly SymContext::embed_lower(const LaurentPoly& f) const {
  if (f.nvars() != n_ - 2) throw std::invalid_argument("embed_lower: ring mismatch");
  return append_vars(f, 1);
}

LaurentPoly SymContext::x_power(int k) const { return lp_var(n_ - 1, n_ - 2, k); }

std::vector<int> SymContext::weights() const {
  std::vector<int> w(n_, 1);
  if (basis_ == SymBasis::Elementary)
    for (int i = 0; i < n_; ++i) w[i] = i + 1;
  return w;
}

std::vector<int> SymContext::barred_weights() const {
  std::vector<int> w = lower().weights();
  w.push_back(1);
  return w;
}

LaurentPoly SymContext::expand(const LaurentPoly& f) const {
  if (basis_ == SymBasis::Monomial) return f;
  return expand_generators(f, Generators::Elementary);
}

LaurentPoly SymContext::expand_barred(const LaurentPoly& f) const {
  if (basis_ == SymBasis::Monomial) return f;
  const int out = n_ - 1;
  std::vector<LaurentPoly> images, inverses(out);
  for (int k = 1; k <= n_ - 2; ++k) images.push_back(append_vars(elem_sym(k, n_ - 2), 1));
  images.push_back(lp_var(out, out - 1));
  if (n_ - 2 > 0) {
    Monomial m(out);
    for (int i = 0; i < n_ - 2; ++i) m.set(i, -1);
    inverses[n_ - 3] = LaurentPoly::term(m, Rational(1));
  }
  inverses[out - 1] = lp_var(out, out - 1, -1);
  return substitute(f, images, inverses, out);
}

LaurentPoly SymContext::from_x(const LaurentPoly& f) const {
  if (basis_ == SymBasis::Monomial) return f;
  return express_symmetric(f, Generators::Elementary);
}

std::vector<LaurentPoly> SymContext::ring_basis(int degree) const {
  std::vector<LaurentPoly> out;
  if (degree < 0) return out;
  if (basis_ == SymBasis::Monomial) {
    for (const auto& lam : partitions(degree, n_)) out.push_back(monomial_sym(lam.parts, n_));
    return out;
  }
  // e-monomials of weighted degree `degree`: partitions with parts <= n.
  for (const auto& lam : partitions(degree, degree)) {
    if (!lam.parts.empty() && lam.parts.front() > n_) continue;
    Monomial a(n_);
    for (int v : lam.parts) a.set(v - 1, a[v - 1] + 1);
    out.push_back(LaurentPoly::term(a, Rational(1)));
  }
  return out;
}

}  // namespace ffalg
