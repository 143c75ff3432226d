#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ffalg/const_scalar.hpp"
#include "ffalg/wedge.hpp"

namespace ffalg {

enum class Chirality { Chiral, AntiChiral };

struct TowerSpec {
  int m = 0;
  int r = 0;
  BasisIndex index;
  std::vector<int> t_indices{-1, 1, 3};
  int max_t_degree = 2;
  int z_order = 2;
  Chirality chirality = Chirality::Chiral;

  int ell(int n) const { return r + n - m; }
};

// Throws std::invalid_argument describing the first violated constraint.
void validate(const TowerSpec& spec);

// (alpha, gamma): alpha[i] is the power of t_{t_indices[i]}, gamma[i] the
// power of z_{i+1}.
struct TermKey {
  std::vector<int> alpha;
  std::vector<int> gamma;
  bool operator<(const TermKey& o) const { return std::tie(alpha, gamma) < std::tie(o.alpha, o.gamma); }
  bool operator==(const TermKey& o) const { return alpha == o.alpha && gamma == o.gamma; }
};

std::string to_string(const TermKey& k, const std::vector<int>& t_indices);

enum class LevelForm { Plain, Hat };

// One level P_{2n} = constant * sum_{alpha,gamma} entries[(alpha,gamma)] t^alpha z^gamma.
// Entries are polynomials in X_1..X_ell whose coefficients live in the
// symmetric-function ring of SymContext(two_n, basis).
struct TowerLevel {
  int two_n = 0;
  int ell = 0;
  Chirality chirality = Chirality::Chiral;
  LevelForm form = LevelForm::Plain;
  SymBasis basis = SymBasis::Elementary;
  ConstScalar constant;
  std::map<TermKey, XPoly> entries;
  int min_x_exponent = 0;
  int max_x_exponent = 0;
};

// Constants of the tower normalisation.
ConstScalar const_c(int n, int m, int r, Chirality chirality);
ConstScalar const_d(int n, int m, int r);
// c_{2n} / c_{2n-2} against the required multiple of d_{2n}.
bool check_c_recursion(int n, int m, int r, Chirality chirality);

// Truncation of exp(sum_i t_i p_i) to total t-degree <= max_degree, keyed by alpha.
std::map<std::vector<int>, LaurentPoly> e_odd_factor(const SymContext& ctx, const std::vector<int>& t_indices,
                                                     int max_degree);

// prod_{i=1}^{m} Q^(sign)(z_i) expanded to order z_order in each z_i, keyed by
// gamma. X-variables X_1..X_ell; the numerator runs over X_{r+1}..X_ell.
std::map<std::vector<int>, XPoly> q_factor(const SymContext& ctx, int sign, int r, int ell, int m, int z_order);

// Level 2n of the tower. Chiral towers only have the plain form; anti-chiral
// towers have the plain form (final polynomial, in X) and the hat form
// (polynomial in 1/X). Returns an empty level for n < m.
TowerLevel build_level(const TowerSpec& spec, int n, LevelForm form = LevelForm::Plain,
                       SymBasis basis = SymBasis::Elementary);

// The witness P'_{2n} of the first sufficient condition, with the constant of
// `level` (ring of the barred context, i.e. SymContext(2n).bar()).
TowerLevel prime_level(const TowerSpec& spec, const TowerLevel& level);

struct Witness {
  std::string condition;
  TermKey key;
  int sign = 0;
  std::string monomial;
};

struct ConditionReport {
  int two_n = 0;
  bool cond1_ok = true;
  bool cond2_ok = true;
  std::optional<Witness> witness;
  bool ok() const { return cond1_ok && cond2_ok; }
};

// Both checks take levels built by build_level (hat form for anti-chiral
// towers); `lower` is level 2n-2 of the same tower.
ConditionReport check_cond1(const TowerSpec& spec, const TowerLevel& level);
ConditionReport check_cond2(const TowerSpec& spec, const TowerLevel& level, const TowerLevel& lower);
// Builds levels m..n_max and runs both checks for every n > m.
std::vector<ConditionReport> check_tower(const TowerSpec& spec, int n_max, SymBasis basis = SymBasis::Elementary);

// Lorentz spin of the (alpha, gamma) component.
int spin(const TowerSpec& spec, const std::vector<int>& alpha, const std::vector<int>& gamma);

// Enumeration helpers shared with the CLI.
std::vector<std::vector<int>> alpha_range(const std::vector<int>& t_indices, int max_degree);
std::vector<std::vector<int>> gamma_range(int m, int z_order);

}  // namespace ffalg
