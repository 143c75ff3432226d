#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffalg/rational.hpp"
#include "ffalg/wedge.hpp"

namespace ffalg {

// Truncated q-series sum_{k < order} coeffs[k] q^{shift + k} + O(q^{shift + order}).
// Coefficient k is known exactly for every k < order.
class QSeries {
 public:
  QSeries() = default;
  QSeries(Rational shift, std::vector<std::int64_t> coeffs, int order);

  static QSeries zero(int order, Rational shift = Rational(0));
  static QSeries one(int order);

  const Rational& shift() const { return shift_; }
  int order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  // Coefficient of q^{shift + k}; k must be below the order.
  std::int64_t coeff(int k) const;
  // First index with a nonzero coefficient, or order if none.
  int valuation() const;

  // Operands must have shifts differing by an integer; the result is aligned
  // at the smaller shift and its order is the smaller of the two absolute orders.
  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator*(std::int64_t c) const;
  // Multiplicative inverse; the leading coefficient must be +1 or -1.
  QSeries inverse() const;
  // Lowers the order (never raises it).
  QSeries truncated(int order) const;
  // Re-expresses the series at a smaller shift (integer difference).
  QSeries aligned(const Rational& shift) const;

  std::string to_text() const;

 private:
  Rational shift_{0};
  std::vector<std::int64_t> coeffs_;
  int order_ = 0;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Gaussian binomial [n choose l]_q to the given order; zero unless 0 <= l <= n.
QSeries q_binomial(int n, int l, int order);
// 1 / ((1-q)(1-q^2)...(1-q^n)).
QSeries inverse_q_factorial(int n, int order);

// The (n, l) summand q^{n^2/4} ([n,l]_q - [n,l-1]_q) / [n]_q! with absolute
// shift n^2/4; order counts from that shift.
QSeries branching_summand(int n, int l, int order);
// Sum of the summands with n = lambda + 2l, n = i mod 2, shift lambda^2/4;
// order counts from the shift. Zero series for inconsistent parity.
QSeries branching_char(int i, int lambda, int order);

// Graded dimensions as a series in q with q^{deg1 + offset}.
QSeries dims_series(const GradedDims& dims, const Rational& offset);

struct CharComparison {
  bool match = true;
  Rational compared_below;               // exponents < this were compared
  std::optional<Rational> first_mismatch;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

// Coefficient-wise comparison below min(both orders, limit) in absolute
// exponents. Throws std::invalid_argument if the shifts differ by a non-integer.
CharComparison char_compare(const QSeries& a, const QSeries& b, std::optional<Rational> limit = std::nullopt);

}  // namespace ffalg
