#include <doctest.h>

#include "ffalg/laurent.hpp"
#include "ffalg/linalg.hpp"
#include "ffalg/xpoly.hpp"

using namespace ffalg;

TEST_CASE("monomial order is graded lex") {
  GradedLex lt;
  CHECK(lt(Monomial{1, 0}, Monomial{0, 2}));
  CHECK(lt(Monomial{0, 1}, Monomial{1, 0}));
  CHECK_FALSE(lt(Monomial{1, 1}, Monomial{1, 1}));
  CHECK(lt(Monomial{-1, 0}, Monomial{0, 0}));
}

TEST_CASE("monomial capacity") {
  CHECK_NOTHROW(Monomial(16));
  CHECK_THROWS(Monomial(17));
}

TEST_CASE("laurent arithmetic cancels exactly") {
  LaurentPoly x = lp_var(2, 0), y = lp_var(2, 1);
  LaurentPoly f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK((f - f).is_zero());
  LaurentPoly inv = lp_var(2, 0, -1);
  CHECK(x * inv == lp_const(2, Rational(1)));
  CHECK(invert_vars(x * y * y) == lp_var(2, 0, -1) * lp_var(2, 1, -2));
  CHECK(has_negative_exponent(inv));
  CHECK(min_exponent(x * x + inv, 0) == -1);
  CHECK(max_exponent(x * x + inv, 0) == 2);
  CHECK_THROWS_AS(x + lp_var(3, 0), std::invalid_argument);
}

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(16, 4) == Rational(4));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("10/-4") == make_rational(-5, 2));
  CHECK_THROWS(make_rational(1, 0));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("substitution is a ring homomorphism") {
  LaurentPoly x = lp_var(1, 0);
  // x -> 2y + 1, x^-1 not available
  LaurentPoly img = lp_var(1, 0) * Rational(2) + lp_const(1, Rational(1));
  LaurentPoly f = x * x + x * Rational(3);
  LaurentPoly g = substitute(f, {img}, {LaurentPoly()}, 1);
  CHECK(g == img * img + img * Rational(3));
  CHECK_THROWS(substitute(lp_var(1, 0, -1), {img}, {LaurentPoly()}, 1));
}

TEST_CASE("weighted homogeneity") {
  LaurentPoly f = lp_var(2, 0, 2) + lp_var(2, 1);
  int d = 0;
  CHECK(weighted_homogeneous(f, {1, 2}, &d));
  CHECK(d == 2);
  CHECK_FALSE(weighted_homogeneous(f, {1, 1}, &d));
}

TEST_CASE("exact solve and integer echelon") {
  RationalMatrix A = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  auto x = solve_square(A, {Rational(3), Rational(5)});
  REQUIRE(x);
  CHECK((*x)[0] == make_rational(4, 5));
  CHECK((*x)[1] == make_rational(7, 5));
  CHECK_FALSE(solve_square({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(0), Rational(1)}));

  IntegerEchelon ech;
  CHECK(ech.insert({{0, Rational(1)}, {2, make_rational(1, 2)}}));
  CHECK(ech.insert({{1, Rational(3)}}));
  CHECK_FALSE(ech.insert({{0, Rational(2)}, {1, Rational(6)}, {2, Rational(1)}}));
  CHECK(ech.contains({{1, Rational(-1)}}));
  CHECK_FALSE(ech.contains({{2, Rational(1)}}));
  CHECK(ech.rank() == 2);
}

TEST_CASE("antisymmetrize and exact division") {
  LaurentPoly one = lp_const(1, Rational(1));
  XPoly p = x_term(Monomial{0, 1}, one);
  XPoly a = antisymmetrize(p, 0, 2);
  CHECK(a == x_term(Monomial{0, 1}, one) - x_term(Monomial{1, 0}, one));
  CHECK(swap_x(a, 0, 1) == -a);
  // X1^2 - X2^2 = (X1 + X2)(X1 - X2)
  XPoly d = x_term(Monomial{2, 0}, one) - x_term(Monomial{0, 2}, one);
  CHECK(divide_by_sum(d, 0, 1) == x_term(Monomial{1, 0}, one) - x_term(Monomial{0, 1}, one));
  CHECK_THROWS_AS(divide_by_sum(x_term(Monomial{2, 0}, one), 0, 1), std::logic_error);
}

TEST_CASE("substitute_last_x") {
  // X1 * X2 with X2 -> -1/x, coefficient ring in x.
  LaurentPoly one = lp_const(1, Rational(1));
  XPoly p = x_term(Monomial{1, 1}, one);
  XPoly s = substitute_last_x(p, -1);
  CHECK(s == x_term(Monomial{1}, lp_var(1, 0, -1) * Rational(-1)));
}
