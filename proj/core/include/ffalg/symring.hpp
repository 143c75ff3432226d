#pragma once

#include <memory>
#include <mutex>
#include <map>
#include <string>
#include <vector>

#include "ffalg/laurent.hpp"

namespace ffalg {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);  // validates
  int length() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// All partitions of `weight` with at most `max_parts` parts, in decreasing
// lexicographic order.
std::vector<Partition> partitions(int weight, int max_parts);

LaurentPoly elem_sym(int k, int n);
LaurentPoly complete_sym(int k, int n);
LaurentPoly power_sum(int k, int n);
// Orbit sum of x^lambda (lambda padded with zeros to length n).
LaurentPoly monomial_sym(const std::vector<int>& lambda, int n);
LaurentPoly schur(const Partition& lambda, int n);

// f(x_1, ..., x_{n-2}, x, -x) with x in slot n-1.
LaurentPoly bar(const LaurentPoly& f);

bool is_symmetric(const LaurentPoly& f);

enum class Generators { Elementary, PowerSum };

// Rewrites a symmetric polynomial in x as a polynomial in e_1..e_n (variable
// k-1 is e_k) or in p_1..p_n. For Elementary, Laurent input is allowed and
// yields negative powers of e_n only. Throws on non-symmetric input.
LaurentPoly express_symmetric(const LaurentPoly& f, Generators kind);
// Expands a polynomial in generators back to x (n = number of generator vars).
LaurentPoly expand_generators(const LaurentPoly& g, Generators kind);
// Newton conversion between the two generator systems (k e_k = sum (-1)^{r-1} p_r e_{k-r}).
LaurentPoly newton_convert(const LaurentPoly& g, Generators from);

// p_k written in e-generators (any k >= 1, n generators).
LaurentPoly power_sum_in_e(int k, int n);
// h_k written in e-generators.
LaurentPoly complete_in_e(int k, int n);

struct OddSummand {
  std::vector<int> h_indices;  // r_1 <= ... <= r_{n'}; factor h_{2r_1} ... h_{2r_{n'}}
  LaurentPoly coeff;           // polynomial in p_1, p_3, ..., p_{2q-1}; variable j is p_{2j+1}
};

struct OddDecomposition {
  int n = 0;
  std::vector<OddSummand> summands;  // sorted by h_indices, nonzero coefficients only
};

OddDecomposition odd_decompose(const LaurentPoly& f);
LaurentPoly reassemble(const OddDecomposition& d);

// Representation of symmetric Laurent polynomials used by the wedge and tower
// constructions. In the Monomial basis a coefficient is an ordinary Laurent
// polynomial in x_1..x_n. In the Elementary basis it is a polynomial in
// e_1..e_n (only e_n may appear with negative exponent). In both cases bar()
// lands in the ring of the (n-2)-context extended by one trailing variable x.
enum class SymBasis { Monomial, Elementary };

class SymContext {
 public:
  SymContext(int n, SymBasis basis);

  int n() const { return n_; }
  SymBasis basis() const { return basis_; }
  int vars() const { return n_; }

  LaurentPoly zero() const { return LaurentPoly(n_); }
  LaurentPoly one() const { return lp_const(n_, Rational(1)); }
  LaurentPoly constant(const Rational& c) const { return lp_const(n_, c); }

  LaurentPoly e(int k) const;
  LaurentPoly h(int k) const;
  // k != 0; negative k gives p_{|k|}(1/x).
  LaurentPoly p(int k) const;
  // x -> 1/x.
  LaurentPoly invert(const LaurentPoly& f) const;
  // Specialization of the last two variables to (x, -x).
  LaurentPoly bar(const LaurentPoly& f) const;
  // Same ring as bar() but for an element of the (n-2)-context: adds x^0.
  LaurentPoly embed_lower(const LaurentPoly& f) const;
  // x^k in the barred ring.
  LaurentPoly x_power(int k) const;

  SymContext lower() const { return SymContext(n_ - 2, basis_); }

  // deg1 weights of the coefficient variables (x has weight 1, e_k weight k).
  std::vector<int> weights() const;
  std::vector<int> barred_weights() const;

  // Conversion to plain Laurent polynomials in x.
  LaurentPoly expand(const LaurentPoly& f) const;
  LaurentPoly expand_barred(const LaurentPoly& f) const;
  // Conversion from a symmetric Laurent polynomial in x.
  LaurentPoly from_x(const LaurentPoly& f) const;

  // Basis of the degree-d part of the polynomial ring R_n.
  std::vector<LaurentPoly> ring_basis(int degree) const;

 private:
  int n_;
  SymBasis basis_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

}  // namespace ffalg
