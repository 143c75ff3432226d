#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they are compared against.

#include <functional>
#include <random>
#include <vector>

#include "ffalg/laurent.hpp"
#include "ffalg/symring.hpp"

namespace oracle {

using ffalg::LaurentPoly;
using ffalg::Monomial;
using ffalg::Rational;

// Sum over k-subsets of {1..n}.
inline LaurentPoly elem_by_subsets(int k, int n) {
  LaurentPoly r(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Monomial m(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) m.set(i, 1);
    r.add_term(m, Rational(1));
  }
  return r;
}

// Sum over all exponent vectors of total degree k.
inline LaurentPoly complete_by_multisets(int k, int n) {
  LaurentPoly r(n);
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      r.add_term(Monomial(e), Rational(1));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (n == 0) return k == 0 ? ffalg::lp_const(0, Rational(1)) : r;
  rec(0, k);
  return r;
}

// Schur polynomial as the generating function of semistandard tableaux.
inline LaurentPoly schur_by_tableaux(const std::vector<int>& lambda, int n) {
  LaurentPoly r(n);
  if (static_cast<int>(lambda.size()) > n) return r;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) t[i].assign(lambda[i], 0);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      Monomial m(n);
      for (const auto& row : t)
        for (int v : row) m.set(v, m[v] + 1);
      r.add_term(m, Rational(1));
      return;
    }
    auto [i, j] = cells[c];
    int lo = 0;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v < n; ++v) {
      t[i][j] = v;
      rec(c + 1);
    }
  };
  rec(0);
  return r;
}

// Random symmetric polynomial: a small integer combination of orbit sums.
inline LaurentPoly random_symmetric(std::mt19937& rng, int n, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4), count(1, 4);
  LaurentPoly f(n);
  for (int k = count(rng); k > 0; --k) {
    auto parts = ffalg::partitions(deg(rng), n);
    if (parts.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    f += ffalg::monomial_sym(parts[pick(rng)].parts, n) * Rational(coef(rng));
  }
  return f;
}

}  // namespace oracle
