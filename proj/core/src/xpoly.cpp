#include "ffalg/xpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ffalg {

XPoly x_series(int nX, int a, const std::vector<LaurentPoly>& coeffs) {
  XPoly r(nX);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m(nX);
    m.set(a, static_cast<int>(k));
    r.add_term(m, coeffs[k]);
  }
  return r;
}

XPoly x_term(const Monomial& m, const LaurentPoly& c) { return XPoly::term(m, c); }

XPoly x_power(int nX, int a, int k, const LaurentPoly& c) {
  Monomial m(nX);
  m.set(a, k);
  return XPoly::term(m, c);
}

XPoly extend_x(const XPoly& p, int nX) {
  XPoly r(nX);
  for (const auto& [m, c] : p) r.emplace_new(m.extended(nX), c);
  return r;
}

XPoly map_coeffs(const XPoly& p, const std::function<LaurentPoly(const LaurentPoly&)>& f) {
  XPoly r(p.nvars());
  for (const auto& [m, c] : p) r.add_term(m, f(c));
  return r;
}

XPoly divide_by_sum(const XPoly& p, int a, int b) {
  const int nX = p.nvars();
  if (p.is_zero()) return p;
  std::map<int, XPoly> by_power;
  for (const auto& [m, c] : p) {
    if (m[a] < 0) throw std::invalid_argument("divide_by_sum: negative exponent in the division variable");
    Monomial rest = m;
    rest.set(a, 0);
    by_power.try_emplace(m[a], XPoly(nX)).first->second.add_term(rest, c);
  }
  const int d = by_power.rbegin()->first;
  auto coeff = [&](int k) { auto it = by_power.find(k); return it == by_power.end() ? XPoly(nX) : it->second; };
  Monomial xb(nX);
  xb.set(b, 1);
  auto times_minus_xb = [&](const XPoly& q) { return -q.shifted(xb); };
  XPoly quotient(nX);
  XPoly q = coeff(d);
  for (int k = d; k >= 1; --k) {
    // q holds q_{k-1}.
    Monomial xa(nX);
    xa.set(a, k - 1);
    quotient += q.shifted(xa);
    q = coeff(k - 1) + times_minus_xb(q);
  }
  if (!q.is_zero()) throw std::logic_error("divide_by_sum: nonzero remainder");
  return quotient;
}

XPoly antisymmetrize(const XPoly& p, int first, int last) {
  const int nX = p.nvars();
  if (first < 0 || last > nX || first > last) throw std::invalid_argument("antisymmetrize: bad range");
  std::vector<int> perm(last - first);
  std::iota(perm.begin(), perm.end(), first);
  XPoly r(nX);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    for (const auto& [m, c] : p) {
      Monomial k = m;
      // Variable first+i is replaced by perm[i].
      for (std::size_t i = 0; i < perm.size(); ++i) k.set(perm[i], m[first + static_cast<int>(i)]);
      if (inv % 2) r.sub_term(k, c); else r.add_term(k, c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

XPoly swap_x(const XPoly& p, int a, int b) {
  XPoly r(p.nvars());
  for (const auto& [m, c] : p) {
    Monomial k = m;
    k.set(a, m[b]);
    k.set(b, m[a]);
    r.emplace_new(k, c);
  }
  return r;
}

XPoly substitute_last_x(const XPoly& p, int sign) {
  const int nX = p.nvars();
  if (nX < 1) throw std::invalid_argument("substitute_last_x: no X variable");
  XPoly r(nX - 1);
  for (const auto& [m, c] : p) {
    int k = m[nX - 1];
    const int cv = c.nvars();
    LaurentPoly factor = lp_var(cv, cv - 1, -k);
    if (sign < 0 && k % 2) factor = -factor;
    r.add_term(m.erase(nX - 1), c * factor);
  }
  return r;
}

bool deg1_homogeneous(const XPoly& p, const std::vector<int>& coeff_weights, int* degree) {
  bool first = true;
  int d0 = 0;
  for (const auto& [m, c] : p) {
    int dc = 0;
    if (!weighted_homogeneous(c, coeff_weights, &dc)) return false;
    int d = dc - m.degree();
    if (first) {
      d0 = d;
      first = false;
    } else if (d != d0) {
      return false;
    }
  }
  if (degree) *degree = d0;
  return true;
}

std::string to_text(const XPoly& p, const std::vector<std::string>& coeff_names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_text(it->second, coeff_names) << ")";
    for (int i = 0; i < it->first.size(); ++i) {
      int k = it->first[i];
      if (k == 0) continue;
      out << "*X" << (i + 1);
      if (k != 1) out << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
  }
  return out.str();
}

}  // namespace ffalg
