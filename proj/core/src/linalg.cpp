#include "ffalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffalg {

std::optional<std::vector<Rational>> solve_square(RationalMatrix A, std::vector<Rational> b) {
  const std::size_t n = A.size();
  if (b.size() != n) throw std::invalid_argument("solve_square: dimension mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("solve_square: matrix is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(A[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / A[col][col];
    for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(A[i][col])) continue;
      Rational f = A[i][col];
      for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

IntegerEchelon::Row IntegerEchelon::primitive(const SparseVector& row) {
  Integer lcm = 1;
  for (const auto& [c, v] : row)
    if (sgn(v) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  Row out;
  for (const auto& [c, v] : row) {
    if (sgn(v) == 0) continue;
    Integer x = v.get_num() * (lcm / v.get_den());
    out.emplace_back(c, std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first) throw std::invalid_argument("IntegerEchelon: repeated column");
  normalize(out);
  return out;
}

void IntegerEchelon::normalize(Row& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntegerEchelon::Row IntegerEchelon::reduce(Row row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      // Lead column has no pivot; later columns may still, but echelon form
      // only needs the leading entry to be new.
      return row;
    }
    const Row& p = it->second;
    Integer a = p.front().second;    // pivot lead
    Integer b = row.front().second;  // row lead
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer fa = a / g, fb = b / g;
    // row := fa*row - fb*p
    Row out;
    out.reserve(row.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < p.size()) {
      if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
        out.emplace_back(row[i].first, fa * row[i].second);
        ++i;
      } else if (i == row.size() || p[j].first < row[i].first) {
        out.emplace_back(p[j].first, -fb * p[j].second);
        ++j;
      } else {
        Integer v = fa * row[i].second - fb * p[j].second;
        if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    normalize(out);
    row = std::move(out);
  }
  return row;
}

bool IntegerEchelon::insert(const SparseVector& v) {
  Row row = reduce(primitive(v));
  if (row.empty()) return false;
  int lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool IntegerEchelon::contains(const SparseVector& v) const { return reduce(primitive(v)).empty(); }

}  // namespace ffalg
