#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffalg/symring.hpp"
#include "ffalg/xpoly.hpp"

namespace ffalg {

// Element of the l-th exterior power: sum of c_t X^{t_1} ^ ... ^ X^{t_l} over
// strictly increasing exponent tuples t. As a polynomial, X^{t_1}^...^X^{t_l}
// stands for Asym(X_1^{t_1} ... X_l^{t_l}). Exponents lie in 0..n, or in -n..0
// for elements over inverted variables.
class WedgeElem {
 public:
  WedgeElem() = default;
  WedgeElem(int n, int ell, int coeff_vars, bool inverted = false);
  // The empty wedge (l = 0) times c.
  static WedgeElem unit(int n, const LaurentPoly& c, bool inverted = false);

  int n() const { return n_; }
  int ell() const { return ell_; }
  int coeff_vars() const { return coeff_vars_; }
  bool inverted() const { return inverted_; }
  bool is_zero() const { return terms_.is_zero(); }
  const XPoly& terms() const { return terms_; }

  // Adds c * X^{e_1} ^ ... ^ X^{e_l} for an arbitrary exponent list.
  void add(const std::vector<int>& exps, const LaurentPoly& c);

  // Fully antisymmetrized polynomial in X_1..X_l.
  XPoly to_poly() const;

  WedgeElem scaled(const LaurentPoly& c) const;
  WedgeElem map_coeffs(const std::function<LaurentPoly(const LaurentPoly&)>& f, int new_coeff_vars) const;

  WedgeElem& operator+=(const WedgeElem& o);
  WedgeElem& operator-=(const WedgeElem& o);
  friend WedgeElem operator+(WedgeElem a, const WedgeElem& b) { return a += b; }
  friend WedgeElem operator-(WedgeElem a, const WedgeElem& b) { return a -= b; }
  bool operator==(const WedgeElem& o) const;
  bool operator!=(const WedgeElem& o) const { return !(*this == o); }

 private:
  void check_compatible(const WedgeElem& o) const;
  void check_range(int e) const;

  int n_ = 0;
  int ell_ = 0;
  int coeff_vars_ = 0;
  bool inverted_ = false;
  XPoly terms_;
};

// Antisymmetrization of a polynomial in X_1..X_l; throws on X-degree outside
// the admissible range.
WedgeElem asym(const XPoly& p, int n, bool inverted = false);
// Reads off the wedge coordinates of a polynomial that is already
// antisymmetric; throws if it is not.
WedgeElem from_antisymmetric(const XPoly& p, int n, bool inverted = false);
WedgeElem wedge_mul(const WedgeElem& u, const WedgeElem& v);

// deg1 with X of weight -1 and coefficient weights from ctx; throws if the
// element is not homogeneous.
int deg1(const WedgeElem& u, const SymContext& ctx);

// ---- distinguished generators (coefficients in the basis of ctx) ----

// P^(2n)_{r,s} by the recursion; any r >= 1 and any s.
LaurentPoly p_rs(const SymContext& ctx, int r, int s);
// Range-checked version in the monomial basis: 1 <= r <= n, 2n = two_n.
LaurentPoly p_rs(int r, int s, int two_n);

enum class GenKind { V0, V, W };
// v_0, v_r or w_r at 2n = ctx.n(); r >= 1 for V and W.
WedgeElem gen_vw(const SymContext& ctx, GenKind kind, int r);
WedgeElem gen_vw(GenKind kind, int r, int two_n);

// Xi_1 (k = 1) or Xi_2 (k = 2) for n = ctx.n() particles.
WedgeElem big_xi(const SymContext& ctx, int k);
WedgeElem big_xi(int k, int n);

// xi_j at 2n = ctx.n().
WedgeElem small_xi(const SymContext& ctx, int j);
WedgeElem small_xi(int j, int two_n);

// rho_sign: substitute X_l = sign/x and (x_{n-1}, x_n) = (x, -x).
XPoly rho(int sign, const WedgeElem& p, const SymContext& ctx);
XPoly rho_poly(int sign, const XPoly& p, const SymContext& ctx);

// P(X, x) -> P(1/X, 1/x).
WedgeElem minus_involution(const WedgeElem& p, const SymContext& ctx);
WedgeElem minus_involution(const WedgeElem& p);

struct BasisIndex {
  std::vector<int> I, J, K;
  int ell() const { return static_cast<int>(I.size() + J.size() + 2 * K.size()); }
  bool operator<(const BasisIndex& o) const;
  bool operator==(const BasisIndex& o) const { return I == o.I && J == o.J && K == o.K; }
};

// Validates the index constraints for half-particle number n; throws
// std::invalid_argument with a description on violation.
void validate_basis_index(const BasisIndex& idx, int n);

std::vector<BasisIndex> basis_indices(int two_n, int ell);
WedgeElem basis_element(const SymContext& ctx, const BasisIndex& idx);
std::vector<std::pair<BasisIndex, WedgeElem>> u_basis(const SymContext& ctx, int ell);
std::vector<std::pair<BasisIndex, WedgeElem>> u_basis(int two_n, int ell);

struct GradedDims {
  int max_degree = 0;
  std::map<int, long> dims;  // deg1 -> dimension, zero entries omitted
  long at(int d) const;
};

// Graded dimensions of U_{2n,l} / (Xi_1 ^ U_{2n,l-1} + Xi_2 ^ U_{2n,l-2}) for
// deg1 <= max_deg, with U_{2n,0} = R_{2n}.
GradedDims quotient_dims(const SymContext& ctx, int ell, int max_deg);
GradedDims quotient_dims(int two_n, int ell, int max_deg);

struct RankReport {
  bool full_rank = true;
  int failing_degree = -1;
  std::map<int, std::pair<long, long>> per_degree;  // degree -> (rank, columns)
};

// Linear independence of {f b : f in a basis of R_{2n}, b in u_basis} per
// deg1 slice up to max_deg.
RankReport free_rank_check(const SymContext& ctx, int ell, int max_deg);

}  // namespace ffalg
