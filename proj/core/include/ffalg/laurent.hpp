#pragma once

#include <string>
#include <vector>

#include "ffalg/sparse_poly.hpp"

namespace ffalg {

LaurentPoly lp_const(int nvars, const Rational& c);
// x_i^k in a ring of nvars variables.
LaurentPoly lp_var(int nvars, int i, int k = 1);

// Ring homomorphism sending variable i to images[i]. Negative powers of
// variable i use inverse_images[i]; an empty inverse entry means the variable
// is not invertible and a negative exponent is an error.
LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images,
                       const std::vector<LaurentPoly>& inverse_images, int out_vars);

// Adds `count` trailing variables with exponent zero.
LaurentPoly append_vars(const LaurentPoly& f, int count = 1);
// Interchanges variables i and j.
LaurentPoly swap_vars(const LaurentPoly& f, int i, int j);
// Negates all exponents (x -> 1/x).
LaurentPoly invert_vars(const LaurentPoly& f);

bool has_negative_exponent(const LaurentPoly& f);
// Minimal and maximal exponent of variable i over all terms; f must be nonzero.
int min_exponent(const LaurentPoly& f, int i);
int max_exponent(const LaurentPoly& f, int i);

// Weighted degree; returns false if f is not homogeneous for the weights.
bool weighted_homogeneous(const LaurentPoly& f, const std::vector<int>& weights, int* degree);

// Human-readable rendering with the given variable names (default x1..xn).
std::string to_text(const LaurentPoly& f, const std::vector<std::string>& names = {});

}  // namespace ffalg
