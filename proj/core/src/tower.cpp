#include "ffalg/tower.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace ffalg {

namespace {

int neg_one_pow(long k) { return k % 2 == 0 ? 1 : -1; }

// f must be a single monomial with coefficient 1; returns that monomial to the power k.
LaurentPoly monomial_power(const LaurentPoly& f, int k) {
  if (f.size() != 1 || f.begin()->second != 1) throw std::logic_error("monomial_power: not a monic monomial");
  std::vector<int> e = f.begin()->first.to_vector();
  for (int& v : e) v *= k;
  return LaurentPoly::term(Monomial(e), Rational(1));
}

std::string describe_term(const Monomial& xm, const LaurentPoly& c) {
  std::ostringstream os;
  os << "X^(";
  for (int i = 0; i < xm.size(); ++i) os << (i ? "," : "") << xm[i];
  os << ")";
  if (!c.is_zero()) {
    const auto& [m, q] = *c.begin();
    os << " coefficient monomial (";
    for (int i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ") by " << to_string(q);
  }
  return os.str();
}

// lambda * A == mu * B in the free module over the symbol monomials.
std::optional<std::string> scaled_difference(const ConstScalar& lambda, const XPoly& A, const ConstScalar& mu,
                                             const XPoly& B) {
  std::set<ConstScalar::Key> keys;
  for (const auto& [k, g] : lambda.terms()) keys.insert(k);
  for (const auto& [k, g] : mu.terms()) keys.insert(k);
  for (const auto& k : keys) {
    Gaussian l = lambda.terms().count(k) ? lambda.terms().at(k) : Gaussian{};
    Gaussian u = mu.terms().count(k) ? mu.terms().at(k) : Gaussian{};
    for (int part = 0; part < 2; ++part) {
      const Rational& a = part ? l.im : l.re;
      const Rational& b = part ? u.im : u.re;
      XPoly d = A.scaled(a) - B.scaled(b);
      if (!d.is_zero()) return describe_term(d.begin()->first, d.begin()->second);
    }
  }
  return std::nullopt;
}

XPoly entry_or_zero(const TowerLevel& lvl, const TermKey& k) {
  auto it = lvl.entries.find(k);
  return it == lvl.entries.end() ? XPoly(lvl.ell) : it->second;
}

}  // namespace

void validate(const TowerSpec& spec) {
  if (spec.m < 0 || spec.r < 0) throw std::invalid_argument("tower spec: m and r must be non-negative");
  if (spec.r > spec.m) throw std::invalid_argument("tower spec: need r <= m (lambda = 2m - 2r >= 0)");
  if (spec.index.ell() != spec.r)
    throw std::invalid_argument("tower spec: |I| + |J| + 2|K| must equal r");
  validate_basis_index(spec.index, spec.m);
  std::set<int> seen;
  for (int t : spec.t_indices) {
    if (t % 2 == 0) throw std::invalid_argument("tower spec: t indices must be odd");
    if (!seen.insert(t).second) throw std::invalid_argument("tower spec: repeated t index");
  }
  if (spec.max_t_degree < 0 || spec.z_order < 0) throw std::invalid_argument("tower spec: negative truncation");
}

std::string to_string(const TermKey& k, const std::vector<int>& t_indices) {
  std::ostringstream os;
  os << "alpha{";
  bool first = true;
  for (std::size_t i = 0; i < k.alpha.size(); ++i) {
    if (!k.alpha[i]) continue;
    os << (first ? "" : ",") << "t" << (i < t_indices.size() ? t_indices[i] : 0) << ":" << k.alpha[i];
    first = false;
  }
  os << "} gamma(";
  for (std::size_t i = 0; i < k.gamma.size(); ++i) os << (i ? "," : "") << k.gamma[i];
  os << ")";
  return os.str();
}

ConstScalar const_c(int n, int m, int r, Chirality chirality) {
  if (n < m) throw std::invalid_argument("const_c: need n >= m");
  const int k = n - m;
  long sign_exp = chirality == Chirality::Chiral ? static_cast<long>(k) * (n + m - 2 * r - 1) / 2
                                                 : static_cast<long>(r) * k;
  ConstScalar izeta = ConstScalar::i() * ConstScalar::zeta0();
  ConstScalar two_pi_i = ConstScalar::i() * ConstScalar::pi() * Rational(2);
  return izeta.pow(-k) * two_pi_i.pow(-k * (n + r)) * Rational(neg_one_pow(sign_exp));
}

ConstScalar const_d(int n, int m, int r) {
  ConstScalar two_pi = ConstScalar::pi() * Rational(2);
  ConstScalar minus_two_pi_i = ConstScalar::i() * ConstScalar::pi() * Rational(-2);
  return two_pi * ConstScalar::zeta0().inverse() * minus_two_pi_i.pow(-r + m - 2 * n);
}

bool check_c_recursion(int n, int m, int r, Chirality chirality) {
  if (n <= m) throw std::invalid_argument("check_c_recursion: need n > m");
  ConstScalar ratio = const_c(n, m, r, chirality) / const_c(n - 1, m, r, chirality);
  int sign = chirality == Chirality::Chiral ? neg_one_pow(n - m - 1) : neg_one_pow(m);
  return ratio == const_d(n, m, r) * Rational(sign);
}

std::vector<std::vector<int>> alpha_range(const std::vector<int>& t_indices, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(t_indices.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[i] = a;
      rec(i + 1, left - a);
    }
    cur[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

std::vector<std::vector<int>> gamma_range(int m, int z_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    for (int g = 0; g <= z_order; ++g) {
      cur[i] = g;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

std::map<std::vector<int>, LaurentPoly> e_odd_factor(const SymContext& ctx, const std::vector<int>& t_indices,
                                                     int max_degree) {
  for (int t : t_indices)
    if (t % 2 == 0) throw std::invalid_argument("e_odd_factor: t indices must be odd");
  std::vector<LaurentPoly> p;
  for (int t : t_indices) p.push_back(ctx.p(t));
  std::map<std::vector<int>, LaurentPoly> out;
  for (const auto& alpha : alpha_range(t_indices, max_degree)) {
    LaurentPoly c = ctx.one();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      Rational fact(1);
      for (int k = 2; k <= alpha[i]; ++k) fact *= k;
      c = c * p[i].pow(alpha[i]) * Rational(1 / fact);
    }
    out.emplace(alpha, c);
  }
  return out;
}

std::map<std::vector<int>, XPoly> q_factor(const SymContext& ctx, int sign, int r, int ell, int m, int z_order) {
  if (r < 0 || ell < r) throw std::invalid_argument("q_factor: need 0 <= r <= ell");
  std::vector<XPoly> series;
  for (int j = 0; j <= z_order; ++j) {
    XPoly s(ell);
    // subsets of {r, ..., ell-1}
    const int tail = ell - r;
    for (unsigned mask = 0; mask < (1u << tail); ++mask) {
      int size = __builtin_popcount(mask);
      if (2 * size > j) continue;
      LaurentPoly h = ctx.h(j - 2 * size);
      if (sign < 0) h = ctx.invert(h);
      Monomial xm(ell);
      for (int b = 0; b < tail; ++b)
        if (mask & (1u << b)) xm.set(r + b, sign > 0 ? -2 : 2);
      s.add_term(xm, size % 2 ? -h : h);
    }
    series.push_back(std::move(s));
  }
  std::map<std::vector<int>, XPoly> out;
  for (const auto& gamma : gamma_range(m, z_order)) {
    XPoly prod = XPoly::constant(ell, ctx.one());
    for (int g : gamma) prod = prod * series[g];
    out.emplace(gamma, std::move(prod));
  }
  return out;
}

namespace {

WedgeElem bottom_wedge(const TowerSpec& spec, const SymContext& ctx) {
  WedgeElem b = basis_element(ctx, spec.index);
  return spec.chirality == Chirality::AntiChiral ? minus_involution(b, ctx) : b;
}

}  // namespace

TowerLevel build_level(const TowerSpec& spec, int n, LevelForm form, SymBasis basis) {
  validate(spec);
  if (spec.chirality == Chirality::Chiral && form == LevelForm::Hat)
    throw std::invalid_argument("build_level: the hat form is only defined for anti-chiral towers");
  TowerLevel lvl;
  lvl.two_n = 2 * n;
  lvl.chirality = spec.chirality;
  lvl.form = form;
  lvl.basis = basis;
  if (n < spec.m) return lvl;
  const int ell = spec.ell(n);
  lvl.ell = ell;
  SymContext ctx(2 * n, basis);
  const bool anti = spec.chirality == Chirality::AntiChiral;

  auto E = e_odd_factor(ctx, spec.t_indices, spec.max_t_degree);
  auto Q = q_factor(ctx, anti ? -1 : 1, spec.r, ell, spec.m, spec.z_order);
  XPoly B = extend_x(bottom_wedge(spec, ctx).to_poly(), ell);

  Monomial tail(ell);
  LaurentPoly scalar = ctx.one();
  for (int a = 1; a <= ell; ++a) {
    int chiral_exp = a > spec.r ? 2 * n + 1 + 2 * spec.r - 2 * a : 0;
    int e = chiral_exp;
    if (anti && form == LevelForm::Hat) e = -chiral_exp;
    if (anti && form == LevelForm::Plain) e = a <= spec.r ? 2 * n : 2 * (a - spec.r) - 1;
    tail.set(a - 1, e);
  }
  if (anti && form == LevelForm::Plain && n > 0) scalar = monomial_power(ctx.e(2 * n), spec.r - spec.m);
  XPoly core = B * x_term(tail, scalar);

  lvl.constant = n == spec.m ? ConstScalar::one() : const_c(n, spec.m, spec.r, spec.chirality);
  const int lo = form == LevelForm::Hat ? -2 * n : 0;
  const int hi = form == LevelForm::Hat ? 0 : 2 * n;
  lvl.min_x_exponent = hi;
  lvl.max_x_exponent = lo;
  for (const auto& [gamma, q] : Q) {
    XPoly qc = q * core;
    for (const auto& [alpha, e] : E) {
      XPoly p = e * qc;
      if (p.is_zero()) continue;
      for (const auto& [xm, c] : p)
        for (int a = 0; a < ell; ++a) {
          if (xm[a] < lo || xm[a] > hi)
            throw std::logic_error("build_level: X-exponent " + std::to_string(xm[a]) + " outside the allowed range");
          lvl.min_x_exponent = std::min(lvl.min_x_exponent, xm[a]);
          lvl.max_x_exponent = std::max(lvl.max_x_exponent, xm[a]);
        }
      lvl.entries.emplace(TermKey{alpha, gamma}, std::move(p));
    }
  }
  return lvl;
}

TowerLevel prime_level(const TowerSpec& spec, const TowerLevel& level) {
  validate(spec);
  const int n = level.two_n / 2;
  if (n <= spec.m) throw std::invalid_argument("prime_level: needs n > m");
  const bool anti = spec.chirality == Chirality::AntiChiral;
  if (anti && level.form != LevelForm::Hat)
    throw std::invalid_argument("prime_level: anti-chiral conditions are stated for the hat form");
  const int ell = spec.ell(n);
  SymContext ctx(2 * n, level.basis);
  SymContext low = ctx.lower();
  auto up = [&](const LaurentPoly& f) { return ctx.embed_lower(f); };

  auto E = e_odd_factor(low, spec.t_indices, spec.max_t_degree);
  auto Q = q_factor(ctx, anti ? -1 : 1, spec.r, ell, spec.m, spec.z_order);
  XPoly B = extend_x(map_coeffs(bottom_wedge(spec, low).to_poly(), up), ell);

  Monomial tail(ell);
  for (int a = spec.r + 1; a < ell; ++a) tail.set(a - 1, 2 * n - 1 + 2 * spec.r - 2 * a);
  tail.set(ell - 1, 2 * n - 1);
  if (anti) tail = tail.inverse();
  const int sign = neg_one_pow(ell - spec.r - 1);
  XPoly core = B * x_term(tail, lp_const(ctx.n() - 1, Rational(sign)));

  TowerLevel out;
  out.two_n = level.two_n;
  out.ell = ell;
  out.chirality = level.chirality;
  out.form = level.form;
  out.basis = level.basis;
  out.constant = level.constant;
  for (const auto& [gamma, q] : Q) {
    XPoly qc = map_coeffs(q, [&](const LaurentPoly& f) { return ctx.bar(f); }) * core;
    for (const auto& [alpha, e] : E) {
      XPoly p = up(e) * qc;
      if (!p.is_zero()) out.entries.emplace(TermKey{alpha, gamma}, std::move(p));
    }
  }
  return out;
}

ConditionReport check_cond1(const TowerSpec& spec, const TowerLevel& level) {
  ConditionReport rep;
  rep.two_n = level.two_n;
  const int n = level.two_n / 2;
  const bool anti = spec.chirality == Chirality::AntiChiral;
  TowerLevel pp = prime_level(spec, level);
  SymContext ctx(2 * n, level.basis);
  const int ell = level.ell;

  LaurentPoly one = lp_const(ctx.n() - 1, Rational(1));
  XPoly factor = XPoly::constant(ell, one);
  for (int a = 0; a + 1 < ell; ++a) {
    XPoly f = XPoly::constant(ell, one) - x_power(ell, a, anti ? -2 : 2, ctx.x_power(anti ? -2 : 2));
    factor = factor * f;
  }

  std::set<TermKey> keys;
  for (const auto& [k, p] : level.entries) keys.insert(k);
  for (const auto& [k, p] : pp.entries) keys.insert(k);
  for (const auto& k : keys) {
    XPoly barred = map_coeffs(entry_or_zero(level, k), [&](const LaurentPoly& f) { return ctx.bar(f); });
    if (barred.nvars() != ell) barred = XPoly(ell);
    XPoly lhs = antisymmetrize(barred, spec.r, ell);
    XPoly rhs = antisymmetrize(factor * entry_or_zero(pp, k), spec.r, ell);
    auto diff = scaled_difference(level.constant, lhs, pp.constant, rhs);
    if (diff) {
      rep.cond1_ok = false;
      rep.witness = Witness{"cond1", k, 0, *diff};
      return rep;
    }
  }
  return rep;
}

ConditionReport check_cond2(const TowerSpec& spec, const TowerLevel& level, const TowerLevel& lower) {
  ConditionReport rep;
  rep.two_n = level.two_n;
  const int n = level.two_n / 2;
  if (lower.two_n != level.two_n - 2 || lower.basis != level.basis || lower.form != level.form)
    throw std::invalid_argument("check_cond2: levels are not adjacent levels of one tower");
  const bool anti = spec.chirality == Chirality::AntiChiral;
  TowerLevel pp = prime_level(spec, level);
  SymContext ctx(2 * n, level.basis);
  ConstScalar rhs_const = const_d(n, spec.m, spec.r) * lower.constant;

  std::set<TermKey> keys;
  for (const auto& [k, p] : pp.entries) keys.insert(k);
  for (const auto& [k, p] : lower.entries) keys.insert(k);
  for (int s : {1, -1}) {
    int factor_sign = anti ? s * neg_one_pow(n - 1) : s;
    LaurentPoly xp = ctx.x_power(anti ? 2 * n - 1 : -(2 * n - 1)) * Rational(factor_sign);
    for (const auto& k : keys) {
      XPoly lhs = substitute_last_x(entry_or_zero(pp, k), s);
      XPoly low = entry_or_zero(lower, k);
      XPoly rhs = xp * map_coeffs(low, [&](const LaurentPoly& f) { return ctx.embed_lower(f); });
      if (low.is_zero()) rhs = XPoly(lhs.nvars());
      auto diff = scaled_difference(level.constant, lhs, rhs_const, rhs);
      if (diff) {
        rep.cond2_ok = false;
        rep.witness = Witness{"cond2", k, s, *diff};
        return rep;
      }
    }
  }
  return rep;
}

std::vector<ConditionReport> check_tower(const TowerSpec& spec, int n_max, SymBasis basis) {
  validate(spec);
  LevelForm form = spec.chirality == Chirality::AntiChiral ? LevelForm::Hat : LevelForm::Plain;
  std::vector<ConditionReport> out;
  TowerLevel prev = build_level(spec, spec.m, form, basis);
  for (int n = spec.m + 1; n <= n_max; ++n) {
    TowerLevel cur = build_level(spec, n, form, basis);
    ConditionReport a = check_cond1(spec, cur);
    ConditionReport b = check_cond2(spec, cur, prev);
    a.cond2_ok = b.cond2_ok;
    if (!a.witness) a.witness = b.witness;
    out.push_back(a);
    prev = std::move(cur);
  }
  return out;
}

int spin(const TowerSpec& spec, const std::vector<int>& alpha, const std::vector<int>& gamma) {
  validate(spec);
  if (alpha.size() != spec.t_indices.size()) throw std::invalid_argument("spin: alpha does not match the t indices");
  if (static_cast<int>(gamma.size()) != spec.m) throw std::invalid_argument("spin: gamma needs m entries");
  SymContext ctx(2 * spec.m, SymBasis::Elementary);
  int degb = deg1(basis_element(ctx, spec.index), ctx);
  int ta = 0, zg = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) ta += spec.t_indices[i] * alpha[i];
  for (int g : gamma) zg += g;
  const int m2 = spec.m * spec.m;
  return spec.chirality == Chirality::Chiral ? m2 + ta + zg + degb : -m2 + ta - zg - degb;
}

}  // namespace ffalg
