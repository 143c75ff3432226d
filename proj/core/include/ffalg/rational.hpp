#pragma once

#include <gmpxx.h>

#include <string>

namespace ffalg {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Reduced rational num/den; throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const std::string& num, const std::string& den);

// Accepts "a" or "a/b".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace ffalg
