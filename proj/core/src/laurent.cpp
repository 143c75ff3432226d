#include "ffalg/laurent.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ffalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const std::string& num, const std::string& den) {
  Integer n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("rational: malformed integer");
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_rational(text, "1");
  return make_rational(text.substr(0, slash), text.substr(slash + 1));
}

std::string to_string(const Rational& q) { return q.get_str(); }

LaurentPoly lp_const(int nvars, const Rational& c) { return LaurentPoly::constant(nvars, c); }

LaurentPoly lp_var(int nvars, int i, int k) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.set(i, k);
  return LaurentPoly::term(m, Rational(1));
}

namespace {

// Powers of one substituted variable, computed on demand.
class PowerTable {
 public:
  PowerTable(const LaurentPoly* base, const LaurentPoly* inverse, int out_vars)
      : base_(base), inverse_(inverse), out_vars_(out_vars) {}

  const LaurentPoly& get(int k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    LaurentPoly value(out_vars_);
    if (k == 0) {
      value = lp_const(out_vars_, Rational(1));
    } else if (k > 0) {
      value = get(k - 1) * *base_;
    } else {
      if (inverse_ == nullptr || inverse_->nvars() != out_vars_)
        throw std::domain_error("substitute: negative power of a non-invertible variable");
      value = get(k + 1) * *inverse_;
    }
    return cache_.emplace(k, std::move(value)).first->second;
  }

 private:
  const LaurentPoly* base_;
  const LaurentPoly* inverse_;
  int out_vars_;
  std::map<int, LaurentPoly> cache_;
};

}  // namespace

LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images,
                       const std::vector<LaurentPoly>& inverse_images, int out_vars) {
  const int n = f.nvars();
  if (static_cast<int>(images.size()) != n) throw std::invalid_argument("substitute: image count mismatch");
  std::vector<PowerTable> tables;
  tables.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (images[i].nvars() != out_vars) throw std::invalid_argument("substitute: image ring mismatch");
    const LaurentPoly* inv = i < static_cast<int>(inverse_images.size()) && inverse_images[i].nvars() == out_vars
                                 ? &inverse_images[i]
                                 : nullptr;
    tables.emplace_back(&images[i], inv, out_vars);
  }
  // Group terms by their exponents in variables 0..n-2 is not worth it at our
  // sizes; each term is a product of cached powers.
  LaurentPoly result(out_vars);
  for (const auto& [m, c] : f) {
    LaurentPoly t = lp_const(out_vars, c);
    for (int i = 0; i < n && !t.is_zero(); ++i)
      if (m[i] != 0) t = t * tables[i].get(m[i]);
    result += t;
  }
  return result;
}

LaurentPoly append_vars(const LaurentPoly& f, int count) {
  LaurentPoly r(f.nvars() + count);
  for (const auto& [m, c] : f) r.emplace_new(m.extended(f.nvars() + count), c);
  return r;
}

LaurentPoly swap_vars(const LaurentPoly& f, int i, int j) {
  LaurentPoly r(f.nvars());
  for (const auto& [m, c] : f) {
    Monomial k = m;
    k.set(i, m[j]);
    k.set(j, m[i]);
    r.emplace_new(k, c);
  }
  return r;
}

LaurentPoly invert_vars(const LaurentPoly& f) {
  LaurentPoly r(f.nvars());
  for (const auto& [m, c] : f) r.emplace_new(m.inverse(), c);
  return r;
}

bool has_negative_exponent(const LaurentPoly& f) {
  for (const auto& [m, c] : f)
    if (m.has_negative()) return true;
  return false;
}

int min_exponent(const LaurentPoly& f, int i) {
  if (f.is_zero()) throw std::invalid_argument("min_exponent of zero polynomial");
  int v = f.begin()->first[i];
  for (const auto& [m, c] : f) v = std::min(v, m[i]);
  return v;
}

int max_exponent(const LaurentPoly& f, int i) {
  if (f.is_zero()) throw std::invalid_argument("max_exponent of zero polynomial");
  int v = f.begin()->first[i];
  for (const auto& [m, c] : f) v = std::max(v, m[i]);
  return v;
}

bool weighted_homogeneous(const LaurentPoly& f, const std::vector<int>& weights, int* degree) {
  bool first = true;
  int d0 = 0;
  for (const auto& [m, c] : f) {
    int d = 0;
    for (int i = 0; i < m.size(); ++i) d += weights.at(i) * m[i];
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

std::string to_text(const LaurentPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest graded-lex term first reads more naturally.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool unit = c == 1;
    if (!unit || m.is_constant()) out << c.get_str();
    bool need_star = !unit;
    for (int i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      need_star = true;
      out << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
      if (m[i] != 1) out << "^" << (m[i] < 0 ? "(" + std::to_string(m[i]) + ")" : std::to_string(m[i]));
    }
  }
  return out.str();
}

}  // namespace ffalg
