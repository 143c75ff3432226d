#include "ffalg/qchar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ffalg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("q-series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("q-series coefficient overflow");
  return r;
}

namespace {

int integer_gap(const Rational& a, const Rational& b) {
  Rational d = a - b;
  if (d.get_den() != 1) throw std::invalid_argument("q-series shifts differ by a non-integer");
  if (!d.get_num().fits_sint_p()) throw std::overflow_error("q-series shift gap too large");
  return static_cast<int>(d.get_num().get_si());
}

}  // namespace

QSeries::QSeries(Rational shift, std::vector<std::int64_t> coeffs, int order)
    : shift_(std::move(shift)), coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
  coeffs_.resize(order, 0);
}

QSeries QSeries::zero(int order, Rational shift) { return QSeries(std::move(shift), {}, order); }

QSeries QSeries::one(int order) { return QSeries(Rational(0), {1}, order); }

std::int64_t QSeries::coeff(int k) const {
  if (k < 0 || k >= order_) throw std::out_of_range("QSeries: coefficient beyond the truncation order");
  return coeffs_[k];
}

int QSeries::valuation() const {
  for (int k = 0; k < order_; ++k)
    if (coeffs_[k]) return k;
  return order_;
}

QSeries QSeries::aligned(const Rational& shift) const {
  int gap = integer_gap(shift_, shift);
  if (gap < 0) throw std::invalid_argument("QSeries: can only align to a smaller shift");
  std::vector<std::int64_t> c(gap, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QSeries(shift, std::move(c), order_ + gap);
}

QSeries QSeries::operator+(const QSeries& o) const {
  const Rational& s = shift_ < o.shift_ ? shift_ : o.shift_;
  QSeries a = aligned(s), b = o.aligned(s);
  int order = std::min(a.order_, b.order_);
  std::vector<std::int64_t> c(order);
  for (int k = 0; k < order; ++k) c[k] = checked_add(a.coeffs_[k], b.coeffs_[k]);
  return QSeries(s, std::move(c), order);
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o * -1; }

QSeries QSeries::operator*(std::int64_t c) const {
  std::vector<std::int64_t> r(order_);
  for (int k = 0; k < order_; ++k) r[k] = checked_mul(coeffs_[k], c);
  return QSeries(shift_, std::move(r), order_);
}

QSeries QSeries::operator*(const QSeries& o) const {
  int va = valuation(), vb = o.valuation();
  int order = std::min(order_ + vb, o.order_ + va);
  std::vector<std::int64_t> c(order, 0);
  for (int i = va; i < order_ && i < order; ++i) {
    if (!coeffs_[i]) continue;
    for (int j = vb; j < o.order_ && i + j < order; ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  }
  return QSeries(shift_ + o.shift_, std::move(c), order);
}

QSeries QSeries::inverse() const {
  int v = valuation();
  if (v >= order_ || (coeffs_[v] != 1 && coeffs_[v] != -1))
    throw std::domain_error("QSeries: leading coefficient must be +1 or -1 to invert");
  const std::int64_t lead = coeffs_[v];
  const int order = order_ - v;
  std::vector<std::int64_t> r(order, 0);
  r[0] = lead;
  for (int k = 1; k < order; ++k) {
    std::int64_t s = 0;
    for (int j = 1; j <= k; ++j) s = checked_add(s, checked_mul(coeffs_[v + j], r[k - j]));
    r[k] = checked_mul(-s, lead);
  }
  return QSeries(-shift_ - v, std::move(r), order);
}

QSeries QSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("QSeries: cannot raise the truncation order");
  return QSeries(shift_, std::vector<std::int64_t>(coeffs_.begin(), coeffs_.begin() + order), order);
}

std::string QSeries::to_text() const {
  std::ostringstream os;
  bool first = true;
  auto exponent = [&](const Rational& e) {
    std::string s = to_string(e);
    return e.get_den() == 1 ? s : "(" + s + ")";
  };
  for (int k = 0; k < order_; ++k) {
    std::int64_t c = coeffs_[k];
    if (!c) continue;
    Rational e = shift_ + k;
    std::int64_t mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (is_zero(e)) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << exponent(e);
  }
  if (first) os << "0";
  os << " + O(q^" << exponent(shift_ + order_) << ")";
  return os.str();
}

QSeries q_binomial(int n, int l, int order) {
  if (order < 0) throw std::invalid_argument("q_binomial: negative order");
  if (n < 0 || l < 0 || l > n) return QSeries::zero(order);
  // Pascal rule [n,l] = [n-1,l-1] + q^l [n-1,l] on exact polynomials.
  std::vector<std::vector<std::vector<std::int64_t>>> t(n + 1);
  for (int a = 0; a <= n; ++a) {
    t[a].resize(a + 1);
    t[a][0] = {1};
    t[a][a] = {1};
    for (int b = 1; b < a; ++b) {
      const auto& x = t[a - 1][b - 1];
      const auto& y = t[a - 1][b];
      std::vector<std::int64_t> c(std::max(x.size(), y.size() + b), 0);
      for (std::size_t k = 0; k < x.size(); ++k) c[k] = checked_add(c[k], x[k]);
      for (std::size_t k = 0; k < y.size(); ++k) c[k + b] = checked_add(c[k + b], y[k]);
      t[a][b] = std::move(c);
    }
  }
  return QSeries(Rational(0), t[n][l], order);
}

QSeries inverse_q_factorial(int n, int order) {
  if (n < 0) throw std::invalid_argument("inverse_q_factorial: negative n");
  QSeries r = QSeries::one(order);
  for (int j = 1; j <= n; ++j) {
    std::vector<std::int64_t> c(order, 0);
    for (int k = 0; k < order; k += j) c[k] = 1;  // 1 / (1 - q^j)
    r = r * QSeries(Rational(0), std::move(c), order);
  }
  return r;
}

QSeries branching_summand(int n, int l, int order) {
  if (n < 0 || l < 0 || 2 * l > n) throw std::invalid_argument("branching_summand: need 0 <= 2l <= n");
  QSeries num = q_binomial(n, l, order) - q_binomial(n, l - 1, order);
  QSeries s = num * inverse_q_factorial(n, order);
  return QSeries(make_rational(n * n, 4), s.coeffs(), s.order());
}

QSeries branching_char(int i, int lambda, int order) {
  if (i != 0 && i != 1) throw std::invalid_argument("branching_char: i must be 0 or 1");
  if (lambda < 0) throw std::invalid_argument("branching_char: lambda must be non-negative");
  Rational shift = make_rational(lambda * lambda, 4);
  if (lambda % 2 != i) return QSeries::zero(order, shift);
  QSeries total = QSeries::zero(order, shift);
  for (int l = 0;; ++l) {
    int offset = l * (l + lambda);  // n^2/4 - lambda^2/4 with n = lambda + 2l
    if (offset >= order) break;
    QSeries s = branching_summand(lambda + 2 * l, l, order - offset);
    total = total + s;
  }
  return total;
}

QSeries dims_series(const GradedDims& dims, const Rational& offset) {
  std::vector<std::int64_t> c(dims.max_degree + 1, 0);
  for (const auto& [d, v] : dims.dims) {
    if (d < 0) throw std::invalid_argument("dims_series: negative degree");
    if (d <= dims.max_degree) c[d] = v;
  }
  return QSeries(offset, std::move(c), dims.max_degree + 1);
}

CharComparison char_compare(const QSeries& a, const QSeries& b, std::optional<Rational> limit) {
  const Rational& s = a.shift() < b.shift() ? a.shift() : b.shift();
  QSeries x = a.aligned(s), y = b.aligned(s);
  int order = std::min(x.order(), y.order());
  if (limit) {
    Rational rel = *limit - s;
    if (rel < 0) order = 0;
    else if (rel < order) order = static_cast<int>(mpz_class(rel.get_num() / rel.get_den()).get_si()) +
                                  (rel.get_den() == 1 ? 0 : 1);
  }
  CharComparison out;
  out.compared_below = s + order;
  for (int k = 0; k < order; ++k)
    if (x.coeff(k) != y.coeff(k)) {
      out.match = false;
      out.first_mismatch = s + k;
      out.lhs = x.coeff(k);
      out.rhs = y.coeff(k);
      break;
    }
  return out;
}

}  // namespace ffalg
