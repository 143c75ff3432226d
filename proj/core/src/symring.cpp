#include "ffalg/symring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "ffalg/linalg.hpp"

namespace ffalg {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, int max_parts, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}

// Partitions of `weight` whose parts are at most `max_part`.
std::vector<Partition> partitions_bounded_part(int weight, int max_part) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> cur;
  partitions_rec(weight, max_part, weight, cur, out);
  return out;
}

}  // namespace

std::vector<Partition> partitions(int weight, int max_parts) {
  std::vector<Partition> out;
  if (weight < 0 || max_parts < 0) return out;
  std::vector<int> cur;
  partitions_rec(weight, weight, max_parts, cur, out);
  return out;
}

LaurentPoly elem_sym(int k, int n) {
  LaurentPoly r(n);
  if (k < 0 || k > n) return r;
  std::vector<int> mask(n, 0);
  std::fill(mask.end() - k, mask.end(), 1);
  do {
    r.add_term(Monomial(mask), Rational(1));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return r;
}

LaurentPoly complete_sym(int k, int n) {
  LaurentPoly r(n);
  if (k < 0) return r;
  if (n == 0) return k == 0 ? lp_const(0, Rational(1)) : r;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      r.add_term(Monomial(e), Rational(1));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, k);
  return r;
}

LaurentPoly power_sum(int k, int n) {
  if (k == 0) throw std::invalid_argument("power_sum: k = 0 is not defined");
  LaurentPoly r(n);
  for (int i = 0; i < n; ++i) r += lp_var(n, i, k);
  return r;
}

LaurentPoly monomial_sym(const std::vector<int>& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n) return LaurentPoly(n);
  std::vector<int> e(lambda);
  e.resize(n, 0);
  std::sort(e.begin(), e.end());
  LaurentPoly r(n);
  do {
    r.add_term(Monomial(e), Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return r;
}

LaurentPoly schur(const Partition& lambda, int n) {
  const int l = lambda.length();
  if (l > n) return LaurentPoly(n);
  if (l == 0) return lp_const(n, Rational(1));
  std::vector<std::vector<LaurentPoly>> h(l, std::vector<LaurentPoly>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) h[i][j] = complete_sym(lambda.parts[i] - i + j, n);
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(n);
  do {
    int inversions = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b)
        if (perm[a] > perm[b]) ++inversions;
    LaurentPoly t = lp_const(n, Rational(inversions % 2 ? -1 : 1));
    for (int i = 0; i < l && !t.is_zero(); ++i) t = t * h[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

LaurentPoly bar(const LaurentPoly& f) {
  const int n = f.nvars();
  if (n < 2) throw std::invalid_argument("bar: needs at least two variables");
  LaurentPoly r(n - 1);
  for (const auto& [m, c] : f) {
    Monomial k = m.erase(n - 1);
    k.set(n - 2, m[n - 2] + m[n - 1]);
    r.add_term(k, m[n - 1] % 2 ? Rational(-c) : c);
  }
  return r;
}

bool is_symmetric(const LaurentPoly& f) {
  for (int i = 0; i + 1 < f.nvars(); ++i)
    if (swap_vars(f, i, i + 1) != f) return false;
  return true;
}

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) { return lex_less(b, a); }

bool is_dominant(const Monomial& m) {
  for (int i = 0; i + 1 < m.size(); ++i)
    if (m[i] < m[i + 1]) return false;
  return true;
}

LaurentPoly e_monomial_expansion(const Monomial& a, std::vector<std::vector<LaurentPoly>>& powers) {
  const int n = a.size();
  LaurentPoly t = lp_const(n, Rational(1));
  for (int k = 0; k < n; ++k) {
    auto& pk = powers[k];
    if (pk.empty()) pk.push_back(lp_const(n, Rational(1)));
    while (static_cast<int>(pk.size()) <= a[k]) pk.push_back(pk.back() * elem_sym(k + 1, n));
    if (a[k] > 0) t = t * pk[a[k]];
  }
  return t;
}

LaurentPoly polynomial_to_elementary(const LaurentPoly& f) {
  const int n = f.nvars();
  // Dominant coefficients, processed from the lex-largest exponent down.
  std::map<Monomial, Rational, decltype(&lex_greater)> dom(&lex_greater);
  for (const auto& [m, c] : f)
    if (is_dominant(m)) dom.emplace(m, c);
  std::vector<std::vector<LaurentPoly>> powers(n);
  LaurentPoly out(n);
  while (!dom.empty()) {
    auto it = dom.begin();
    Monomial lam = it->first;
    Rational c = it->second;
    Monomial a(n);
    for (int k = 0; k < n; ++k) a.set(k, lam[k] - (k + 1 < n ? lam[k + 1] : 0));
    out.add_term(a, c);
    LaurentPoly ex = e_monomial_expansion(a, powers);
    for (const auto& [m, d] : ex) {
      if (!is_dominant(m)) continue;
      auto jt = dom.find(m);
      Rational v = (jt == dom.end() ? Rational(0) : jt->second) - c * d;
      if (jt == dom.end()) {
        if (!is_zero(v)) dom.emplace(m, v);
      } else if (is_zero(v)) {
        dom.erase(jt);
      } else {
        jt->second = v;
      }
    }
  }
  return out;
}

// e_k (k = 0..n) in power sums: variable r-1 is p_r.
std::vector<LaurentPoly> elementary_in_p(int n) {
  std::vector<LaurentPoly> E(n + 1, LaurentPoly(n));
  E[0] = lp_const(n, Rational(1));
  for (int k = 1; k <= n; ++k) {
    LaurentPoly s(n);
    for (int r = 1; r <= k; ++r) {
      LaurentPoly t = lp_var(n, r - 1) * E[k - r];
      if (r % 2) s += t; else s -= t;
    }
    E[k] = s * Rational(1, k);
  }
  return E;
}

}  // namespace

LaurentPoly power_sum_in_e(int k, int n) {
  if (k < 1) throw std::invalid_argument("power_sum_in_e: k must be positive");
  std::vector<LaurentPoly> P(k + 1, LaurentPoly(n));
  for (int j = 1; j <= k; ++j) {
    LaurentPoly s(n);
    for (int i = 1; i <= std::min(j - 1, n); ++i) {
      LaurentPoly t = lp_var(n, i - 1) * P[j - i];
      if (i % 2) s += t; else s -= t;
    }
    if (j <= n) s += lp_var(n, j - 1) * Rational(j % 2 ? j : -j);
    P[j] = s;
  }
  return P[k];
}

LaurentPoly complete_in_e(int k, int n) {
  if (k < 0) return LaurentPoly(n);
  std::vector<LaurentPoly> H(k + 1, LaurentPoly(n));
  H[0] = lp_const(n, Rational(1));
  for (int j = 1; j <= k; ++j) {
    LaurentPoly s(n);
    for (int i = 1; i <= std::min(j, n); ++i) {
      LaurentPoly t = lp_var(n, i - 1) * H[j - i];
      if (i % 2) s += t; else s -= t;
    }
    H[j] = s;
  }
  return H[k];
}

LaurentPoly express_symmetric(const LaurentPoly& f, Generators kind) {
  if (!is_symmetric(f)) throw std::invalid_argument("express_symmetric: input is not symmetric");
  const int n = f.nvars();
  int shift = 0;
  for (const auto& [m, c] : f)
    for (int i = 0; i < n; ++i) shift = std::max(shift, -m[i]);
  if (shift > 0 && kind == Generators::PowerSum)
    throw std::domain_error("express_symmetric: Laurent input has no power-sum expression");
  LaurentPoly g = f;
  if (shift > 0) {
    Monomial s(n);
    for (int i = 0; i < n; ++i) s.set(i, shift);
    g = f.shifted(s);
  }
  LaurentPoly out = polynomial_to_elementary(g);
  if (shift > 0) {
    Monomial s(n);
    s.set(n - 1, -shift);
    out = out.shifted(s);
  }
  if (kind == Generators::Elementary) return out;
  return newton_convert(out, Generators::Elementary);
}

LaurentPoly expand_generators(const LaurentPoly& g, Generators kind) {
  const int n = g.nvars();
  std::vector<LaurentPoly> images, inverses(n);
  for (int k = 1; k <= n; ++k) images.push_back(kind == Generators::Elementary ? elem_sym(k, n) : power_sum(k, n));
  if (kind == Generators::Elementary && n > 0) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) m.set(i, -1);
    inverses[n - 1] = LaurentPoly::term(m, Rational(1));
  }
  return substitute(g, images, inverses, n);
}

LaurentPoly newton_convert(const LaurentPoly& g, Generators from) {
  const int n = g.nvars();
  if (from == Generators::Elementary) {
    if (has_negative_exponent(g)) throw std::domain_error("newton_convert: negative powers of e_n");
    auto E = elementary_in_p(n);
    std::vector<LaurentPoly> images(E.begin() + 1, E.end());
    return substitute(g, images, {}, n);
  }
  if (has_negative_exponent(g)) throw std::domain_error("newton_convert: negative powers of power sums");
  std::vector<LaurentPoly> images;
  for (int k = 1; k <= n; ++k) images.push_back(power_sum_in_e(k, n));
  return substitute(g, images, {}, n);
}

OddDecomposition odd_decompose(const LaurentPoly& f) {
  const int n = f.nvars();
  if (has_negative_exponent(f)) throw std::invalid_argument("odd_decompose: input must be a polynomial");
  LaurentPoly g = express_symmetric(f, Generators::Elementary);
  const int nh = n / 2;           // number of h factors
  const int np = (n + 1) / 2;     // odd power sums p_1, p_3, ..., p_{2np-1}
  OddDecomposition out;
  out.n = n;
  if (g.is_zero()) return out;

  std::vector<int> weights(n);
  std::iota(weights.begin(), weights.end(), 1);
  std::map<int, LaurentPoly> by_degree;
  for (const auto& [m, c] : g) {
    int d = 0;
    for (int k = 0; k < n; ++k) d += weights[k] * m[k];
    auto it = by_degree.try_emplace(d, LaurentPoly(n)).first;
    it->second.add_term(m, c);
  }

  std::map<int, LaurentPoly> p_cache, h_cache;
  auto p_odd = [&](int k) -> const LaurentPoly& {
    auto it = p_cache.find(k);
    if (it == p_cache.end()) it = p_cache.emplace(k, power_sum_in_e(k, n)).first;
    return it->second;
  };
  auto h_even = [&](int k) -> const LaurentPoly& {
    auto it = h_cache.find(k);
    if (it == h_cache.end()) it = h_cache.emplace(k, complete_in_e(k, n)).first;
    return it->second;
  };

  std::map<std::vector<int>, LaurentPoly> collected;
  for (const auto& [d, part] : by_degree) {
    struct Unknown {
      std::vector<int> r;
      Monomial alpha;
      LaurentPoly value;
    };
    std::vector<Unknown> unknowns;
    for (int hw = 0; 2 * hw <= d; ++hw) {
      std::vector<std::vector<int>> rs;
      for (const auto& lam : partitions(hw, nh)) {
        std::vector<int> r(lam.parts);
        r.resize(nh, 0);
        std::sort(r.begin(), r.end());
        rs.push_back(r);
      }
      std::sort(rs.begin(), rs.end());
      for (const auto& r : rs) {
        LaurentPoly hprod = lp_const(n, Rational(1));
        for (int ri : r) hprod = hprod * h_even(2 * ri);
        int pw = d - 2 * hw;
        std::vector<Monomial> alphas;
        for (const auto& lam : partitions_bounded_part(pw, 2 * np - 1)) {
          bool odd = std::all_of(lam.parts.begin(), lam.parts.end(), [](int v) { return v % 2 == 1; });
          if (!odd) continue;
          Monomial a(np);
          for (int v : lam.parts) a.set(v / 2, a[v / 2] + 1);
          alphas.push_back(a);
        }
        std::sort(alphas.begin(), alphas.end(), lex_less);
        for (const auto& a : alphas) {
          LaurentPoly v = hprod;
          for (int j = 0; j < np; ++j)
            for (int t = 0; t < a[j]; ++t) v = v * p_odd(2 * j + 1);
          unknowns.push_back({r, a, std::move(v)});
        }
      }
    }
    // Coordinates: e-monomials of weighted degree d.
    std::map<Monomial, int, GradedLex> coord;
    for (const auto& lam : partitions_bounded_part(d, n)) {
      Monomial a(n);
      for (int v : lam.parts) a.set(v - 1, a[v - 1] + 1);
      coord.emplace(a, 0);
    }
    int idx = 0;
    for (auto& [m, i] : coord) i = idx++;
    const int dim = static_cast<int>(coord.size());
    if (static_cast<int>(unknowns.size()) != dim)
      throw std::logic_error("odd_decompose: spanning set size differs from the graded dimension");
    RationalMatrix A(dim, std::vector<Rational>(dim));
    std::vector<Rational> b(dim);
    for (int j = 0; j < dim; ++j)
      for (const auto& [m, c] : unknowns[j].value) A[coord.at(m)][j] = c;
    for (const auto& [m, c] : part) b[coord.at(m)] = c;
    auto x = solve_square(A, b);
    if (!x) throw std::logic_error("odd_decompose: singular graded system");
    for (int j = 0; j < dim; ++j) {
      if (is_zero((*x)[j])) continue;
      auto it = collected.try_emplace(unknowns[j].r, LaurentPoly(np)).first;
      it->second.add_term(unknowns[j].alpha, (*x)[j]);
    }
  }
  for (auto& [r, c] : collected)
    if (!c.is_zero()) out.summands.push_back({r, c});
  return out;
}

LaurentPoly reassemble(const OddDecomposition& d) {
  const int n = d.n;
  const int np = (n + 1) / 2;
  LaurentPoly out(n);
  std::vector<LaurentPoly> images;
  for (int j = 0; j < np; ++j) images.push_back(power_sum(2 * j + 1, n));
  for (const auto& s : d.summands) {
    LaurentPoly t = substitute(s.coeff, images, {}, n);
    for (int r : s.h_indices) t = t * complete_sym(2 * r, n);
    out += t;
  }
  return out;
}

}  // namespace ffalg
