#include "ffalg/wedge.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ffalg/linalg.hpp"

namespace ffalg {

WedgeElem::WedgeElem(int n, int ell, int coeff_vars, bool inverted)
    : n_(n), ell_(ell), coeff_vars_(coeff_vars), inverted_(inverted), terms_(ell) {
  if (n < 0 || ell < 0) throw std::invalid_argument("WedgeElem: negative size");
}

WedgeElem WedgeElem::unit(int n, const LaurentPoly& c, bool inverted) {
  WedgeElem w(n, 0, c.nvars(), inverted);
  w.terms_.add_term(Monomial(0), c);
  return w;
}

void WedgeElem::check_range(int e) const {
  bool ok = inverted_ ? (e <= 0 && e >= -n_) : (e >= 0 && e <= n_);
  if (!ok) throw std::out_of_range("WedgeElem: X-exponent " + std::to_string(e) + " outside the admissible range");
}

void WedgeElem::add(const std::vector<int>& exps, const LaurentPoly& c) {
  if (static_cast<int>(exps.size()) != ell_) throw std::invalid_argument("WedgeElem: wrong number of factors");
  if (c.nvars() != coeff_vars_) throw std::invalid_argument("WedgeElem: coefficient ring mismatch");
  for (int e : exps) check_range(e);
  std::vector<int> s(exps);
  int inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return;
      if (s[i] > s[j]) ++inversions;
    }
  std::sort(s.begin(), s.end());
  if (inversions % 2) terms_.sub_term(Monomial(s), c); else terms_.add_term(Monomial(s), c);
}

XPoly WedgeElem::to_poly() const { return antisymmetrize(terms_, 0, ell_); }

WedgeElem WedgeElem::scaled(const LaurentPoly& c) const {
  if (c.nvars() != coeff_vars_) throw std::invalid_argument("WedgeElem: coefficient ring mismatch");
  WedgeElem r(n_, ell_, coeff_vars_, inverted_);
  r.terms_ = terms_.scaled(c);
  return r;
}

WedgeElem WedgeElem::map_coeffs(const std::function<LaurentPoly(const LaurentPoly&)>& f, int new_coeff_vars) const {
  WedgeElem r(n_, ell_, new_coeff_vars, inverted_);
  for (const auto& [m, c] : terms_) r.terms_.add_term(m, f(c));
  return r;
}

void WedgeElem::check_compatible(const WedgeElem& o) const {
  if (n_ != o.n_ || ell_ != o.ell_ || inverted_ != o.inverted_ || coeff_vars_ != o.coeff_vars_)
    throw std::invalid_argument("WedgeElem: incompatible operands");
}

WedgeElem& WedgeElem::operator+=(const WedgeElem& o) {
  check_compatible(o);
  terms_ += o.terms_;
  return *this;
}

WedgeElem& WedgeElem::operator-=(const WedgeElem& o) {
  check_compatible(o);
  terms_ -= o.terms_;
  return *this;
}

bool WedgeElem::operator==(const WedgeElem& o) const {
  if (n_ != o.n_ || ell_ != o.ell_ || inverted_ != o.inverted_) return false;
  if (terms_.is_zero() && o.terms_.is_zero()) return true;
  return coeff_vars_ == o.coeff_vars_ && terms_ == o.terms_;
}

WedgeElem asym(const XPoly& p, int n, bool inverted) {
  int cv = p.is_zero() ? 0 : p.begin()->second.nvars();
  WedgeElem w(n, p.nvars(), cv, inverted);
  for (const auto& [m, c] : p) w.add(m.to_vector(), c);
  return w;
}

WedgeElem from_antisymmetric(const XPoly& p, int n, bool inverted) {
  int cv = p.is_zero() ? 0 : p.begin()->second.nvars();
  WedgeElem w(n, p.nvars(), cv, inverted);
  for (const auto& [m, c] : p) {
    bool increasing = true;
    for (int i = 0; i + 1 < m.size(); ++i)
      if (m[i] >= m[i + 1]) increasing = false;
    if (increasing) w.add(m.to_vector(), c);
  }
  if (w.to_poly() != p) throw std::logic_error("from_antisymmetric: polynomial is not antisymmetric");
  return w;
}

WedgeElem wedge_mul(const WedgeElem& u, const WedgeElem& v) {
  if (u.n() != v.n()) throw std::invalid_argument("wedge_mul: particle numbers differ");
  if (u.inverted() != v.inverted()) throw std::invalid_argument("wedge_mul: orientation differs");
  if (u.ell() + v.ell() > u.n() + 1) throw std::invalid_argument("wedge_mul: exterior degree exceeds n + 1");
  int cv = u.is_zero() ? v.coeff_vars() : u.coeff_vars();
  if (!u.is_zero() && !v.is_zero() && u.coeff_vars() != v.coeff_vars())
    throw std::invalid_argument("wedge_mul: coefficient ring mismatch");
  WedgeElem r(u.n(), u.ell() + v.ell(), cv, u.inverted());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      std::vector<int> e = a.to_vector();
      std::vector<int> eb = b.to_vector();
      e.insert(e.end(), eb.begin(), eb.end());
      r.add(e, ca * cb);
    }
  return r;
}

int deg1(const WedgeElem& u, const SymContext& ctx) {
  int d = 0;
  if (!deg1_homogeneous(u.terms(), ctx.weights(), &d)) throw std::logic_error("deg1: element is not homogeneous");
  return d;
}

LaurentPoly p_rs(const SymContext& ctx, int r, int s) {
  if (r < 1) throw std::invalid_argument("p_rs: r must be at least 1");
  std::map<std::pair<int, int>, LaurentPoly> memo;
  std::function<LaurentPoly(int, int)> rec = [&](int rr, int ss) -> LaurentPoly {
    auto key = std::make_pair(rr, ss);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LaurentPoly v = rr == 1 ? ctx.e(2 * ss - 1) : rec(rr - 1, ss + 1) - ctx.e(2 * ss) * rec(rr - 1, 1);
    memo.emplace(key, v);
    return v;
  };
  return rec(r, s);
}

LaurentPoly p_rs(int r, int s, int two_n) {
  if (two_n < 2 || two_n % 2) throw std::invalid_argument("p_rs: two_n must be a positive even number");
  if (r < 1 || r > two_n / 2) throw std::out_of_range("p_rs: r out of range");
  return p_rs(SymContext(two_n, SymBasis::Monomial), r, s);
}

namespace {

int half_of(const SymContext& ctx) {
  if (ctx.n() % 2) throw std::invalid_argument("generator requires an even number of particles");
  return ctx.n() / 2;
}

// Coefficient list of a one-variable generator.
std::vector<LaurentPoly> vw_coeffs(const SymContext& ctx, GenKind kind, int r) {
  const int n = half_of(ctx);
  std::vector<LaurentPoly> c;
  if (kind == GenKind::V0) {
    c.assign(2 * n + 1, ctx.zero());
    for (int j = 0; j <= n; ++j) c[2 * j] = ctx.e(2 * j);
    return c;
  }
  if (r < 1) throw std::out_of_range("generator index must be at least 1");
  const int shift = kind == GenKind::W ? 1 : 0;
  c.assign(std::max(0, 2 * n - 1 + shift), ctx.zero());
  for (int s = 1; s <= n; ++s) c[2 * (s - 1) + shift] = p_rs(ctx, r, s);
  return c;
}

XPoly one_var(const std::vector<LaurentPoly>& coeffs, int nX, int a) { return x_series(nX, a, coeffs); }

std::vector<LaurentPoly> theta(const SymContext& ctx, int sign) {
  std::vector<LaurentPoly> c;
  for (int k = 0; k <= ctx.n(); ++k) c.push_back(sign < 0 && k % 2 ? -ctx.e(k) : ctx.e(k));
  return c;
}

}  // namespace

WedgeElem gen_vw(const SymContext& ctx, GenKind kind, int r) {
  auto c = vw_coeffs(ctx, kind, r);
  WedgeElem w(ctx.n(), 1, ctx.vars());
  for (std::size_t k = 0; k < c.size(); ++k) w.add({static_cast<int>(k)}, c[k]);
  return w;
}

WedgeElem gen_vw(GenKind kind, int r, int two_n) {
  if (two_n < 0 || two_n % 2) throw std::invalid_argument("gen_vw: two_n must be even");
  if (kind != GenKind::V0 && (r < 1 || r > two_n / 2)) throw std::out_of_range("gen_vw: r out of range");
  return gen_vw(SymContext(two_n, SymBasis::Monomial), kind, r);
}

WedgeElem big_xi(const SymContext& ctx, int k) {
  const int n = ctx.n();
  if (k != 1 && k != 2) throw std::invalid_argument("big_xi: k must be 1 or 2");
  if (n < k) throw std::invalid_argument("big_xi: needs n >= k");
  auto tp = theta(ctx, +1), tm = theta(ctx, -1);
  const Rational half(1, 2);
  if (k == 1) {
    WedgeElem w(n, 1, ctx.vars());
    for (int j = 0; j <= n; ++j) {
      LaurentPoly c = (n - 1) % 2 ? tp[j] - tm[j] : tp[j] + tm[j];
      w.add({j}, c * half);
    }
    return w;
  }
  XPoly p1 = one_var(tp, 2, 0), p2 = one_var(tp, 2, 1);
  XPoly m1 = one_var(tm, 2, 0), m2 = one_var(tm, 2, 1);
  LaurentPoly one = ctx.one();
  XPoly diff = x_power(2, 0, 1, one) - x_power(2, 1, 1, one);
  XPoly first = divide_by_sum((p1 * p2 - m1 * m2) * diff, 0, 1);
  XPoly second = p1 * m2 - p2 * m1;
  XPoly total = n % 2 ? first - second : first + second;
  return from_antisymmetric(total.scaled(half), n);
}

WedgeElem big_xi(int k, int n) { return big_xi(SymContext(n, SymBasis::Monomial), k); }

WedgeElem small_xi(const SymContext& ctx, int j) {
  const int n = half_of(ctx);
  if (j < 1) throw std::out_of_range("small_xi: j must be at least 1");
  (void)n;
  auto v0 = vw_coeffs(ctx, GenKind::V0, 0);
  auto wj = vw_coeffs(ctx, GenKind::W, j);
  XPoly a = one_var(v0, 2, 0) * one_var(wj, 2, 1);  // v0(X1) w(X2)
  XPoly b = one_var(v0, 2, 1) * one_var(wj, 2, 0);  // v0(X2) w(X1)
  LaurentPoly one = ctx.one();
  XPoly diff = x_power(2, 0, 1, one) - x_power(2, 1, 1, one);
  XPoly total = divide_by_sum((a + b) * diff, 0, 1) - a + b;
  return from_antisymmetric(total.scaled(Rational(1, 2)), ctx.n());
}

WedgeElem small_xi(int j, int two_n) {
  if (two_n < 2 || two_n % 2) throw std::invalid_argument("small_xi: two_n must be a positive even number");
  if (j < 1 || j > two_n / 2) throw std::out_of_range("small_xi: j out of range");
  return small_xi(SymContext(two_n, SymBasis::Monomial), j);
}

XPoly rho_poly(int sign, const XPoly& p, const SymContext& ctx) {
  if (p.nvars() < 1) throw std::invalid_argument("rho: undefined for exterior degree 0");
  if (ctx.n() < 2) throw std::invalid_argument("rho: needs at least two particles");
  XPoly barred = map_coeffs(p, [&](const LaurentPoly& c) { return ctx.bar(c); });
  return substitute_last_x(barred, sign);
}

XPoly rho(int sign, const WedgeElem& p, const SymContext& ctx) {
  if (p.ell() < 1) throw std::invalid_argument("rho: undefined for exterior degree 0");
  return rho_poly(sign, p.to_poly(), ctx);
}

WedgeElem minus_involution(const WedgeElem& p, const SymContext& ctx) {
  WedgeElem r(p.n(), p.ell(), p.coeff_vars(), !p.inverted());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.to_vector();
    for (int& v : e) v = -v;
    r.add(e, ctx.invert(c));
  }
  return r;
}

WedgeElem minus_involution(const WedgeElem& p) {
  return minus_involution(p, SymContext(p.coeff_vars(), SymBasis::Monomial));
}

bool BasisIndex::operator<(const BasisIndex& o) const {
  auto key = [](const BasisIndex& b) {
    return std::make_tuple(b.K.size(), -static_cast<long>(b.I.size()), b.I, b.J, b.K);
  };
  return key(*this) < key(o);
}

void validate_basis_index(const BasisIndex& idx, int n) {
  const int l1 = static_cast<int>(idx.I.size()), l3 = static_cast<int>(idx.K.size());
  for (std::size_t i = 0; i < idx.I.size(); ++i) {
    if (idx.I[i] < 1 || idx.I[i] > n) throw std::invalid_argument("basis index: I entries must lie in 1..n");
    if (i > 0 && idx.I[i] <= idx.I[i - 1]) throw std::invalid_argument("basis index: I must be strictly increasing");
  }
  for (std::size_t i = 0; i < idx.J.size(); ++i) {
    if (idx.J[i] < 1 || idx.J[i] > n - l1 - l3)
      throw std::invalid_argument("basis index: J entries must lie in 1..n-l1-l3");
    if (i > 0 && idx.J[i] <= idx.J[i - 1]) throw std::invalid_argument("basis index: J must be strictly increasing");
  }
  for (std::size_t i = 0; i < idx.K.size(); ++i) {
    if (idx.K[i] < 1 || idx.K[i] > n - l1 - l3 + 1)
      throw std::invalid_argument("basis index: K entries must lie in 1..n-l1-l3+1");
    if (i > 0 && idx.K[i] < idx.K[i - 1]) throw std::invalid_argument("basis index: K must be weakly increasing");
  }
}

namespace {

void subsets(int lo, int hi, int size, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? lo : (strict ? cur.back() + 1 : cur.back());
  for (int v = start; v <= hi; ++v) {
    cur.push_back(v);
    subsets(lo, hi, size, strict, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> choose(int hi, int size, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (size == 0) return {{}};
  if (hi < 1) return out;
  subsets(1, hi, size, strict, cur, out);
  return out;
}

}  // namespace

std::vector<BasisIndex> basis_indices(int two_n, int ell) {
  if (two_n < 0 || two_n % 2) throw std::invalid_argument("basis_indices: two_n must be even");
  if (ell < 0 || ell > two_n) throw std::invalid_argument("basis_indices: need 0 <= ell <= 2n");
  const int n = two_n / 2;
  std::vector<BasisIndex> out;
  for (int l3 = 0; 2 * l3 <= ell; ++l3)
    for (int l1 = ell - 2 * l3; l1 >= 0; --l1) {
      int l2 = ell - 2 * l3 - l1;
      for (const auto& I : choose(n, l1, true))
        for (const auto& J : choose(n - l1 - l3, l2, true))
          for (const auto& K : choose(n - l1 - l3 + 1, l3, false)) out.push_back({I, J, K});
    }
  return out;
}

WedgeElem basis_element(const SymContext& ctx, const BasisIndex& idx) {
  WedgeElem b = WedgeElem::unit(ctx.n(), ctx.one());
  for (int i : idx.I) b = wedge_mul(b, gen_vw(ctx, GenKind::V, i));
  for (int j : idx.J) b = wedge_mul(b, gen_vw(ctx, GenKind::W, j));
  for (int k : idx.K) b = wedge_mul(b, small_xi(ctx, k));
  return b;
}

std::vector<std::pair<BasisIndex, WedgeElem>> u_basis(const SymContext& ctx, int ell) {
  std::vector<std::pair<BasisIndex, WedgeElem>> out;
  for (const auto& idx : basis_indices(ctx.n(), ell)) out.emplace_back(idx, basis_element(ctx, idx));
  return out;
}

std::vector<std::pair<BasisIndex, WedgeElem>> u_basis(int two_n, int ell) {
  return u_basis(SymContext(two_n, SymBasis::Monomial), ell);
}

long GradedDims::at(int d) const {
  auto it = dims.find(d);
  return it == dims.end() ? 0 : it->second;
}

namespace {

struct Generator {
  WedgeElem elem;
  int degree;
};

using CoordKey = std::pair<Monomial, Monomial>;
struct CoordLess {
  bool operator()(const CoordKey& a, const CoordKey& b) const {
    GradedLex g;
    if (g(a.first, b.first)) return true;
    if (g(b.first, a.first)) return false;
    return g(a.second, b.second);
  }
};

// Spanning vectors f * g for f in the degree (d - deg g) part of R.
std::vector<WedgeElem> slice(const SymContext& ctx, const std::vector<Generator>& gens, int d) {
  std::vector<WedgeElem> out;
  for (const auto& g : gens)
    for (const auto& f : ctx.ring_basis(d - g.degree)) out.push_back(g.elem.scaled(f));
  return out;
}

std::vector<SparseVector> to_vectors(const std::vector<WedgeElem>& elems, std::map<CoordKey, int, CoordLess>& coords) {
  for (const auto& w : elems)
    for (const auto& [t, c] : w.terms())
      for (const auto& [m, q] : c) coords.emplace(CoordKey{t, m}, 0);
  int idx = 0;
  for (auto& [k, i] : coords) i = idx++;
  std::vector<SparseVector> out;
  for (const auto& w : elems) {
    SparseVector v;
    for (const auto& [t, c] : w.terms())
      for (const auto& [m, q] : c) v.emplace_back(coords.at(CoordKey{t, m}), q);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Generator> generators(const SymContext& ctx, int ell) {
  std::vector<Generator> out;
  if (ell < 0) return out;
  if (ell == 0) {
    out.push_back({WedgeElem::unit(ctx.n(), ctx.one()), 0});
    return out;
  }
  if (ell > ctx.n()) return out;
  for (auto& [idx, b] : u_basis(ctx, ell)) out.push_back({b, deg1(b, ctx)});
  return out;
}

}  // namespace

GradedDims quotient_dims(const SymContext& ctx, int ell, int max_deg) {
  GradedDims out;
  out.max_degree = max_deg;
  const int N = ctx.n();
  if (ell > N) return out;
  auto U = generators(ctx, ell);
  std::vector<Generator> rel;
  if (ell >= 1) {
    WedgeElem xi1 = big_xi(ctx, 1);
    for (const auto& g : generators(ctx, ell - 1)) rel.push_back({wedge_mul(xi1, g.elem), g.degree});
  }
  if (ell >= 2 && N >= 2) {
    WedgeElem xi2 = big_xi(ctx, 2);
    for (const auto& g : generators(ctx, ell - 2)) rel.push_back({wedge_mul(xi2, g.elem), g.degree});
  }
  for (int d = 0; d <= max_deg; ++d) {
    auto u = slice(ctx, U, d);
    auto r = slice(ctx, rel, d);
    std::vector<WedgeElem> all(u);
    all.insert(all.end(), r.begin(), r.end());
    std::map<CoordKey, int, CoordLess> coords;
    auto vecs = to_vectors(all, coords);
    IntegerEchelon eu, er;
    for (std::size_t i = 0; i < u.size(); ++i) eu.insert(vecs[i]);
    for (std::size_t i = u.size(); i < vecs.size(); ++i) {
      er.insert(vecs[i]);
      if (!eu.contains(vecs[i])) throw std::logic_error("quotient_dims: relation outside the submodule");
    }
    long dim = static_cast<long>(eu.rank()) - static_cast<long>(er.rank());
    if (dim != 0) out.dims[d] = dim;
  }
  return out;
}

GradedDims quotient_dims(int two_n, int ell, int max_deg) {
  if (two_n < 0 || two_n % 2) throw std::invalid_argument("quotient_dims: two_n must be even");
  return quotient_dims(SymContext(two_n, SymBasis::Elementary), ell, max_deg);
}

RankReport free_rank_check(const SymContext& ctx, int ell, int max_deg) {
  RankReport rep;
  auto U = generators(ctx, ell);
  for (int d = 0; d <= max_deg; ++d) {
    auto u = slice(ctx, U, d);
    std::map<CoordKey, int, CoordLess> coords;
    auto vecs = to_vectors(u, coords);
    IntegerEchelon e;
    for (const auto& v : vecs) e.insert(v);
    rep.per_degree[d] = {static_cast<long>(e.rank()), static_cast<long>(u.size())};
    if (static_cast<long>(e.rank()) != static_cast<long>(u.size()) && rep.full_rank) {
      rep.full_rank = false;
      rep.failing_degree = d;
    }
  }
  return rep;
}

}  // namespace ffalg
