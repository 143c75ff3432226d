#include <doctest.h>

#include <random>

#include "ffalg/wedge.hpp"

using namespace ffalg;

namespace {

LaurentPoly one(int n) { return lp_const(n, Rational(1)); }

// prod_{a < count} (1 - x^2 X_a^2) in nX X-variables over the barred ring of ctx.
XPoly bar_factor(const SymContext& ctx, int nX, int count) {
  const int bv = ctx.n() - 1;
  XPoly r = XPoly::constant(nX, one(bv));
  for (int a = 0; a < count; ++a) {
    XPoly f = XPoly::constant(nX, one(bv)) - x_power(nX, a, 2, ctx.x_power(2));
    r = r * f;
  }
  return r;
}

XPoly barred(const WedgeElem& w, const SymContext& ctx) {
  return map_coeffs(w.to_poly(), [&](const LaurentPoly& c) { return ctx.bar(c); });
}

XPoly embedded(const WedgeElem& w, const SymContext& ctx) {
  return map_coeffs(w.to_poly(), [&](const LaurentPoly& c) { return ctx.embed_lower(c); });
}

WedgeElem expanded(const WedgeElem& w, const SymContext& ctx) {
  return w.map_coeffs([&](const LaurentPoly& c) { return ctx.expand(c); }, ctx.n());
}

WedgeElem random_wedge(std::mt19937& rng, int n, int ell) {
  std::uniform_int_distribution<int> ex(0, n), coef(-3, 3), terms(1, 4), cx(-2, 2);
  WedgeElem w(n, ell, n);
  for (int t = terms(rng); t > 0; --t) {
    std::vector<int> e(ell);
    for (int& v : e) v = ex(rng);
    Monomial m(n);
    for (int i = 0; i < n; ++i) m.set(i, cx(rng));
    w.add(e, LaurentPoly::term(m, Rational(coef(rng))));
  }
  return w;
}

}  // namespace

TEST_CASE("asym examples") {
  LaurentPoly c = one(2);
  XPoly p = x_term(Monomial{0, 1}, c);
  WedgeElem a = asym(p, 2);
  WedgeElem e(2, 2, 2);
  e.add({0, 1}, c);
  CHECK(a == e);
  CHECK(asym(x_term(Monomial{1, 1}, c), 2).is_zero());
  CHECK(asym(a.to_poly(), 2) == e + e);
  CHECK_THROWS(asym(x_term(Monomial{3, 0}, c), 2));
}

TEST_CASE("wedge storage normalizes order and sign") {
  WedgeElem w(3, 2, 3);
  w.add({2, 0}, one(3));
  WedgeElem v(3, 2, 3);
  v.add({0, 2}, one(3) * Rational(-1));
  CHECK(w == v);
  w.add({1, 1}, one(3));
  CHECK(w == v);
  CHECK_THROWS(w.add({0, 4}, one(3)));
}

TEST_CASE("wedge product") {
  WedgeElem x0(2, 1, 2), x1(2, 1, 2);
  x0.add({0}, one(2));
  x1.add({1}, one(2));
  WedgeElem p = wedge_mul(x0, x1);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms().begin()->first == Monomial{0, 1});
  CHECK(wedge_mul(x1, x0) == WedgeElem(2, 2, 2) - p);

  WedgeElem v1 = gen_vw(GenKind::V, 1, 2), w1 = gen_vw(GenKind::W, 1, 2);
  WedgeElem expect(2, 2, 2);
  expect.add({0, 1}, elem_sym(1, 2) * elem_sym(1, 2));
  CHECK(wedge_mul(v1, w1) == expect);

  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    WedgeElem u = random_wedge(rng, 3, 1), v = random_wedge(rng, 3, 2);
    CHECK(wedge_mul(u, u).is_zero());
    CHECK(wedge_mul(u, v) == wedge_mul(v, u));  // (-1)^{1*2} = 1
    WedgeElem u2 = random_wedge(rng, 3, 1);
    CHECK(wedge_mul(u, u2) == WedgeElem(3, 2, 3) - wedge_mul(u2, u));
  }
  CHECK_THROWS(wedge_mul(random_wedge(rng, 2, 2), random_wedge(rng, 2, 2)));
}

TEST_CASE("P_rs examples") {
  CHECK(p_rs(1, 1, 4) == elem_sym(1, 4));
  CHECK(p_rs(2, 1, 4) == elem_sym(3, 4) - elem_sym(2, 4) * elem_sym(1, 4));
  CHECK_THROWS(p_rs(0, 1, 4));
  CHECK_THROWS(p_rs(3, 1, 4));
}

TEST_CASE("bar of P_rs for r, s <= 3 and 2n <= 6") {
  for (int n2 = 2; n2 <= 6; n2 += 2) {
    SymContext ctx(n2, SymBasis::Elementary), low = ctx.lower();
    for (int r = 1; r <= 3; ++r)
      for (int s = 1; s <= 3; ++s) {
        LaurentPoly rhs = ctx.embed_lower(p_rs(low, r, s)) - ctx.x_power(2) * ctx.embed_lower(p_rs(low, r, s - 1));
        CAPTURE(n2);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(ctx.bar(p_rs(ctx, r, s)) == rhs);
      }
  }
}

TEST_CASE("generator examples") {
  const LaurentPoly e1 = elem_sym(1, 2), e2 = elem_sym(2, 2);
  WedgeElem v0(2, 1, 2), v1(2, 1, 2), w1(2, 1, 2);
  v0.add({0}, one(2));
  v0.add({2}, e2);
  v1.add({0}, e1);
  w1.add({1}, e1);
  CHECK(gen_vw(GenKind::V0, 0, 2) == v0);
  CHECK(gen_vw(GenKind::V, 1, 2) == v1);
  CHECK(gen_vw(GenKind::W, 1, 2) == w1);
  CHECK_THROWS(gen_vw(GenKind::V, 2, 2));

  WedgeElem xi1(2, 1, 2);
  xi1.add({1}, e1);
  CHECK(big_xi(1, 2) == xi1);
  WedgeElem xi13(3, 1, 3);
  xi13.add({0}, one(3));
  xi13.add({2}, elem_sym(2, 3));
  CHECK(big_xi(1, 3) == xi13);
  for (int n = 2; n <= 6; ++n) {
    SymContext ctx(n, SymBasis::Elementary);
    CHECK(deg1(big_xi(ctx, 1), ctx) == 0);
    CHECK(deg1(big_xi(ctx, 2), ctx) == 0);
  }
}

TEST_CASE("both coefficient bases give the same generators") {
  for (int n2 = 2; n2 <= 6; n2 += 2) {
    SymContext ce(n2, SymBasis::Elementary), cm(n2, SymBasis::Monomial);
    CHECK(expanded(gen_vw(ce, GenKind::V0, 0), ce) == gen_vw(cm, GenKind::V0, 0));
    for (int r = 1; r <= n2 / 2; ++r) {
      CHECK(expanded(gen_vw(ce, GenKind::V, r), ce) == gen_vw(cm, GenKind::V, r));
      CHECK(expanded(gen_vw(ce, GenKind::W, r), ce) == gen_vw(cm, GenKind::W, r));
      CHECK(expanded(small_xi(ce, r), ce) == small_xi(cm, r));
    }
    CHECK(expanded(big_xi(ce, 1), ce) == big_xi(cm, 1));
    CHECK(expanded(big_xi(ce, 2), ce) == big_xi(cm, 2));
  }
}

TEST_CASE("small xi") {
  WedgeElem xi = small_xi(1, 4);
  SymContext cm(4, SymBasis::Monomial);
  CHECK(rho(1, xi, cm).is_zero());
  CHECK(rho(-1, xi, cm).is_zero());
  CHECK(swap_x(xi.to_poly(), 0, 1) == -xi.to_poly());
}

TEST_CASE("rho examples") {
  SymContext c4(4, SymBasis::Monomial);
  CHECK(rho(1, big_xi(1, 4), c4).is_zero());
  CHECK(rho(-1, gen_vw(GenKind::V, 1, 4), c4).is_zero());
  SymContext c2(2, SymBasis::Monomial);
  WedgeElem x0(2, 1, 2);
  x0.add({0}, one(2));
  XPoly r = rho(1, x0, c2);
  CHECK(r == XPoly::constant(0, one(1)));
  CHECK_THROWS(rho(1, WedgeElem::unit(2, one(2)), c2));
}

TEST_CASE("generators restrict along bar (2n <= 6)") {
  for (int n2 = 2; n2 <= 6; n2 += 2) {
    SymContext ctx(n2, SymBasis::Elementary), low = ctx.lower();
    const XPoly f1 = bar_factor(ctx, 1, 1), f2 = bar_factor(ctx, 2, 2);
    CAPTURE(n2);
    CHECK(barred(gen_vw(ctx, GenKind::V0, 0), ctx) == f1 * embedded(gen_vw(low, GenKind::V0, 0), ctx));
    for (int i = 1; i <= n2 / 2; ++i) {
      CAPTURE(i);
      CHECK(barred(gen_vw(ctx, GenKind::V, i), ctx) == f1 * embedded(gen_vw(low, GenKind::V, i), ctx));
      CHECK(barred(gen_vw(ctx, GenKind::W, i), ctx) == f1 * embedded(gen_vw(low, GenKind::W, i), ctx));
      CHECK(barred(small_xi(ctx, i), ctx) == f2 * embedded(small_xi(low, i), ctx));
    }
  }
}

TEST_CASE("basis enumeration") {
  CHECK(basis_indices(2, 1).size() == 2);
  CHECK(basis_indices(4, 1).size() == 4);
  CHECK(basis_indices(2, 0).size() == 1);
  CHECK(basis_indices(4, 2).size() == 6);
  CHECK(basis_indices(6, 2).size() == 15);
  CHECK(basis_indices(6, 3).size() == 20);
  auto b = u_basis(2, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0].second == gen_vw(GenKind::V, 1, 2));
  CHECK(b[1].second == gen_vw(GenKind::W, 1, 2));
  CHECK(u_basis(2, 0)[0].second == WedgeElem::unit(2, one(2)));

  CHECK_NOTHROW(validate_basis_index({{1}, {1}, {}}, 2));
  CHECK_THROWS_AS(validate_basis_index({{2, 1}, {}, {}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_basis_index({{1, 2}, {1}, {}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_basis_index({{}, {}, {3}}, 2), std::invalid_argument);
  CHECK_NOTHROW(validate_basis_index({{}, {}, {1, 1}}, 2));
}

TEST_CASE("basis elements satisfy both residue conditions (2n <= 4)") {
  for (int n2 = 2; n2 <= 4; n2 += 2) {
    SymContext ctx(n2, SymBasis::Elementary);
    for (int ell = 1; ell <= std::min(3, n2); ++ell)
      for (const auto& [idx, w] : u_basis(ctx, ell)) {
        CAPTURE(n2);
        CAPTURE(ell);
        CHECK(rho(1, w, ctx).is_zero());
        CHECK(rho(-1, w, ctx).is_zero());
        int d = 0;
        CHECK_NOTHROW(d = deg1(w, ctx));
      }
  }
}

TEST_CASE("basis elements agree across coefficient bases") {
  for (int n2 = 2; n2 <= 4; n2 += 2) {
    SymContext ce(n2, SymBasis::Elementary), cm(n2, SymBasis::Monomial);
    for (int ell = 0; ell <= std::min(3, n2); ++ell) {
      auto be = u_basis(ce, ell), bm = u_basis(cm, ell);
      REQUIRE(be.size() == bm.size());
      for (std::size_t i = 0; i < be.size(); ++i) {
        CHECK(be[i].first == bm[i].first);
        CHECK(expanded(be[i].second, ce) == bm[i].second);
        CHECK(deg1(be[i].second, ce) == deg1(bm[i].second, cm));
      }
    }
  }
}

TEST_CASE("deg1 rejects inhomogeneous elements") {
  SymContext cm(2, SymBasis::Monomial);
  WedgeElem w(2, 1, 2);
  w.add({0}, one(2));
  w.add({1}, one(2));
  CHECK_THROWS(deg1(w, cm));
}

TEST_CASE("sign-shifted antisymmetrization of the tail monomial") {
  // Asym_{r+1..l} prod X_a^{2n+1+2r-2a}
  //   = (-1)^{l-r-1} Asym_{r+1..l} X_l^{2n-1} prod_{a<l} (1 - x^2 X_a^2) X_a^{2n-1+2r-2a}
  const LaurentPoly c = one(1), x2 = lp_var(1, 0, 2);
  for (int n = 1; n <= 2; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int d = 1; d <= 2; ++d) {
        const int ell = r + d;
        Monomial lhs_m(ell), rhs_m(ell);
        for (int a = r + 1; a <= ell; ++a) lhs_m.set(a - 1, 2 * n + 1 + 2 * r - 2 * a);
        XPoly rhs = x_power(ell, ell - 1, 2 * n - 1, c);
        for (int a = r + 1; a < ell; ++a) {
          XPoly f = XPoly::constant(ell, c) - x_power(ell, a - 1, 2, x2);
          rhs = rhs * f * x_power(ell, a - 1, 2 * n - 1 + 2 * r - 2 * a, c);
        }
        XPoly lhs = antisymmetrize(x_term(lhs_m, c), r, ell);
        rhs = antisymmetrize(rhs, r, ell);
        if ((ell - r - 1) % 2) rhs = -rhs;
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(d);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("quotient dimensions") {
  GradedDims m21 = quotient_dims(2, 1, 9);
  GradedDims m20 = quotient_dims(2, 0, 9);
  const long e21[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5};
  const long e20[] = {1, 1, 2, 2, 3, 3, 4, 4, 5, 5};
  for (int d = 0; d <= 9; ++d) {
    CHECK(m21.at(d) == e21[d]);
    CHECK(m20.at(d) == e20[d]);
  }
  GradedDims z = quotient_dims(2, 3, 6);
  for (int d = 0; d <= 6; ++d) CHECK(z.at(d) == 0);
  CHECK(quotient_dims(4, 5, 4).dims.empty());
}

TEST_CASE("quotient dimensions agree across coefficient bases") {
  for (int ell = 0; ell <= 2; ++ell) {
    SymContext ce(4, SymBasis::Elementary), cm(4, SymBasis::Monomial);
    GradedDims a = quotient_dims(ce, ell, 5), b = quotient_dims(cm, ell, 5);
    CHECK(a.dims == b.dims);
  }
}

TEST_CASE("free rank in the monomial basis (2n = 2)") {
  SymContext cm(2, SymBasis::Monomial);
  for (int ell = 0; ell <= 2; ++ell) {
    RankReport r = free_rank_check(cm, ell, 6);
    CHECK(r.full_rank);
    CHECK(r.failing_degree == -1);
  }
}

TEST_CASE("minus involution") {
  SymContext cm(2, SymBasis::Monomial);
  WedgeElem e1x(2, 1, 2);
  e1x.add({1}, elem_sym(1, 2));
  WedgeElem img(2, 1, 2, true);
  img.add({-1}, power_sum(-1, 2));
  CHECK(minus_involution(e1x) == img);
  CHECK(minus_involution(img) == e1x);

  WedgeElem v1 = gen_vw(GenKind::V, 1, 4);
  CHECK(minus_involution(minus_involution(v1)) == v1);

  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    WedgeElem w = random_wedge(rng, 3, 1 + t % 3);
    CHECK(minus_involution(minus_involution(w)) == w);
    LaurentPoly f = power_sum(1 + t % 2, 3);
    CHECK(minus_involution(w.scaled(f)) == minus_involution(w).scaled(invert_vars(f)));
  }

  SymContext c4(4, SymBasis::Monomial);
  WedgeElem xm = minus_involution(big_xi(1, 4));
  CHECK(rho(1, xm, c4).is_zero());
  CHECK(rho(-1, xm, c4).is_zero());

  SymContext ce(4, SymBasis::Elementary);
  WedgeElem v = gen_vw(ce, GenKind::V, 2);
  CHECK(expanded(minus_involution(v, ce), ce) == minus_involution(expanded(v, ce)));
}
