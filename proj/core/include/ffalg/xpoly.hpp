#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ffalg/laurent.hpp"

namespace ffalg {

// Sum_k coeffs[k] X_a^k in a ring of nX X-variables.
XPoly x_series(int nX, int a, const std::vector<LaurentPoly>& coeffs);
// c * X^m.
XPoly x_term(const Monomial& m, const LaurentPoly& c);
// X_a^k with coefficient c.
XPoly x_power(int nX, int a, int k, const LaurentPoly& c);

// Pads X exponent vectors with zeros up to nX variables.
XPoly extend_x(const XPoly& p, int nX);

XPoly map_coeffs(const XPoly& p, const std::function<LaurentPoly(const LaurentPoly&)>& f);

// Exact quotient by (X_a + X_b); throws std::logic_error on a nonzero remainder.
XPoly divide_by_sum(const XPoly& p, int a, int b);

// Sum over permutations sigma of the variables first..last-1 of
// sgn(sigma) P(X_sigma).
XPoly antisymmetrize(const XPoly& p, int first, int last);

// Swaps X_a and X_b.
XPoly swap_x(const XPoly& p, int a, int b);

// Substitutes X_{last} = sign * x^{-1} where x is the last coefficient variable.
// The result has one X-variable fewer.
XPoly substitute_last_x(const XPoly& p, int sign);

// Weighted degree with X-weight -1 and coefficient weights w; returns false if
// not homogeneous.
bool deg1_homogeneous(const XPoly& p, const std::vector<int>& coeff_weights, int* degree);

std::string to_text(const XPoly& p, const std::vector<std::string>& coeff_names = {});

}  // namespace ffalg
