#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "json_io.hpp"

using namespace ffalg;
using io::Json;

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_pretty = false;

void emit(const Json& j) { std::cout << j.dump(g_pretty ? 2 : -1) << "\n"; }

int default_barnes_n() {
  if (const char* v = std::getenv("FFALG_BARNES_N")) {
    try {
      std::size_t used = 0;
      int n = std::stoi(v, &used);
      if (used == std::string(v).size() && n >= 8) return n;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("FFALG_BARNES_N must be an integer >= 8");
  }
  return 200;
}

std::string coeff_text(const LaurentPoly& f, const SymContext& ctx) {
  return to_text(ctx.expand(f));
}

// ---- basis ----

struct BasisArgs {
  int two_n = 2;
  int ell = 1;
};

void run_basis(const BasisArgs& a) {
  SymContext ctx(a.two_n, SymBasis::Monomial);
  Json list = Json::array();
  for (const auto& [idx, b] : u_basis(ctx, a.ell)) {
    Json e = {{"index", io::to_json(idx)}, {"deg1", deg1(b, ctx)}, {"element", io::to_json(b, ctx)}};
    if (g_pretty) e["text"] = to_text(b.terms());
    list.push_back(e);
  }
  emit(list);
}

// ---- residue-check ----

struct ResidueArgs {
  int two_n = 2;
  int ell = 1;
  bool include_xi = true;
};

void run_residue(const ResidueArgs& a) {
  if (a.ell < 1) throw std::invalid_argument("residue-check: ell must be at least 1");
  SymContext ctx(a.two_n, SymBasis::Elementary);
  std::vector<std::pair<Json, WedgeElem>> items;
  for (auto& [idx, b] : u_basis(ctx, a.ell)) items.emplace_back(Json{{"index", io::to_json(idx)}}, b);
  if (a.include_xi) {
    if (a.ell == 1) items.emplace_back(Json{{"element", "Xi1"}}, big_xi(ctx, 1));
    if (a.ell == 2) items.emplace_back(Json{{"element", "Xi2"}}, big_xi(ctx, 2));
  }
  bool all_ok = true;
  Json list = Json::array();
  for (const auto& [label, w] : items) {
    bool plus = rho(1, w, ctx).is_zero(), minus = rho(-1, w, ctx).is_zero();
    all_ok = all_ok && plus && minus;
    Json e = label;
    e["rho_plus_zero"] = plus;
    e["rho_minus_zero"] = minus;
    list.push_back(e);
  }
  emit({{"two_n", a.two_n}, {"ell", a.ell}, {"all_zero", all_ok}, {"elements", list}});
  if (!all_ok) throw VerificationFailure("residue-check: some element has a nonzero residue");
}

// ---- quotient-char ----

struct QuotientArgs {
  int two_n = 2;
  int ell = 1;
  int max_deg = 8;
  bool compare = false;
};

void run_quotient(const QuotientArgs& a) {
  if (a.max_deg < 0) throw std::invalid_argument("quotient-char: max-deg must be non-negative");
  GradedDims dims = quotient_dims(a.two_n, a.ell, a.max_deg);
  const Rational offset = make_rational(a.two_n * a.two_n, 4);
  QSeries ch = dims_series(dims, offset);
  Json out = {{"two_n", a.two_n}, {"ell", a.ell}, {"dims", io::to_json(dims)}, {"character_deg2", io::to_json(ch)}};
  if (a.compare) {
    if (2 * a.ell > a.two_n) throw std::invalid_argument("quotient-char: branching comparison needs 2 ell <= 2n");
    QSeries ref = branching_summand(a.two_n, a.ell, a.max_deg + 1);
    CharComparison c = char_compare(ch, ref);
    Json cmp = {{"reference", io::to_json(ref)}, {"match", c.match}, {"compared_below", to_string(c.compared_below)}};
    if (c.first_mismatch)
      cmp["first_mismatch"] = {{"exponent", to_string(*c.first_mismatch)}, {"dims", c.lhs}, {"reference", c.rhs}};
    out["comparison"] = cmp;
    emit(out);
    if (!c.match) throw VerificationFailure("quotient-char: dimensions differ from the branching summand");
    return;
  }
  emit(out);
}

// ---- tower ----

struct TowerArgs {
  int m = 0, r = 0;
  std::vector<int> I, J, K;
  std::vector<int> t_indices{-1, 1, 3};
  int max_t_degree = 2;
  int z_order = -1;
  bool anti = false;
  int n = 0;
  int n_max = 2;
  bool hat = false;
  bool e_basis = false;
};

TowerSpec make_spec(const TowerArgs& a) {
  TowerSpec s;
  s.m = a.m;
  s.r = a.r;
  s.index = BasisIndex{a.I, a.J, a.K};
  s.t_indices = a.t_indices;
  s.max_t_degree = a.max_t_degree;
  s.z_order = a.z_order < 0 ? std::min(a.m, 2) : a.z_order;
  s.chirality = a.anti ? Chirality::AntiChiral : Chirality::Chiral;
  validate(s);
  return s;
}

void add_tower_options(CLI::App* cmd, TowerArgs& a) {
  cmd->add_option("--m", a.m, "half particle number of the bottom level")->required();
  cmd->add_option("--r", a.r, "exterior degree of the bottom level (r <= m)")->required();
  cmd->add_option("--I", a.I, "indices of v factors, comma separated")->delimiter(',');
  cmd->add_option("--J", a.J, "indices of w factors, comma separated")->delimiter(',');
  cmd->add_option("--K", a.K, "indices of xi factors, comma separated")->delimiter(',');
  cmd->add_option("--t-indices", a.t_indices, "odd indices of the t variables (default -1,1,3)")->delimiter(',');
  cmd->add_option("--max-t-degree", a.max_t_degree, "total degree bound in t (default 2)");
  cmd->add_option("--z-order", a.z_order, "order in each z_i (default min(m, 2))");
  cmd->add_flag("--anti", a.anti, "anti-chiral tower");
}

void run_tower_build(const TowerArgs& a) {
  TowerSpec spec = make_spec(a);
  if (a.hat && !a.anti) throw std::invalid_argument("tower-build: --hat needs --anti");
  if (a.n < 0) throw std::invalid_argument("tower-build: n must be non-negative");
  TowerLevel lvl = build_level(spec, a.n, a.hat ? LevelForm::Hat : LevelForm::Plain);
  if (g_pretty) {
    SymContext ctx(lvl.two_n, lvl.basis);
    std::vector<std::string> e_names;
    for (int k = 1; k <= ctx.n(); ++k) e_names.push_back("e" + std::to_string(k));
    std::cout << "P_" << lvl.two_n << " = [" << lvl.constant.to_string() << "] * sum over " << lvl.entries.size()
              << " (alpha, gamma) components\n";
    for (const auto& [key, p] : lvl.entries) {
      std::cout << to_string(key, spec.t_indices) << ":\n";
      for (const auto& [m, c] : p) {
        std::cout << "  X^(";
        for (int i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << m[i];
        std::cout << ") * (" << (a.e_basis ? to_text(c, e_names) : coeff_text(c, ctx)) << ")\n";
      }
    }
    return;
  }
  emit(io::to_json(lvl, spec, !a.e_basis));
}

void run_tower_check(const TowerArgs& a) {
  TowerSpec spec = make_spec(a);
  if (a.n_max < spec.m) throw std::invalid_argument("tower-check: n-max must be at least m");
  auto reports = check_tower(spec, a.n_max);
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    list.push_back(io::to_json(r, spec));
  }
  Json rec = Json::array();
  for (int n = spec.m + 1; n <= a.n_max; ++n) {
    bool c = check_c_recursion(n, spec.m, spec.r, spec.chirality);
    ok = ok && c;
    rec.push_back({{"two_n", 2 * n}, {"ok", c}});
  }
  emit({{"m", spec.m},
        {"r", spec.r},
        {"index", io::to_json(spec.index)},
        {"chirality", a.anti ? "antichiral" : "chiral"},
        {"reports", list},
        {"c_recursion", rec},
        {"all_ok", ok}});
  if (!ok) throw VerificationFailure("tower-check: a sufficient condition failed");
}

// ---- decompose-odd ----

struct DecomposeArgs {
  std::string poly;
  std::string file;
};

void run_decompose(const DecomposeArgs& a) {
  std::string text = a.poly;
  if (!a.file.empty()) {
    std::ifstream in(a.file == "-" ? "/dev/stdin" : a.file);
    if (!in) throw std::invalid_argument("decompose-odd: cannot read " + a.file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (text.empty()) throw std::invalid_argument("decompose-odd: give --poly or --file");
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("decompose-odd: malformed JSON: ") + e.what());
  }
  LaurentPoly f = io::laurent_from_json(j);
  if (!is_symmetric(f)) throw std::invalid_argument("decompose-odd: input is not symmetric");
  if (has_negative_exponent(f)) throw std::invalid_argument("decompose-odd: input has negative exponents");
  OddDecomposition d = odd_decompose(f);
  bool round_trip = reassemble(d) == f;
  Json out = io::to_json(d);
  out["round_trip"] = round_trip;
  emit(out);
  if (!round_trip) throw VerificationFailure("decompose-odd: reassembly differs from the input");
}

// ---- zeta ----

struct ZetaArgs {
  std::vector<double> beta{0.3, 0.1};
  double tol = 1e-6;
  int N = -1;
  bool check = false;
};

void run_zeta(const ZetaArgs& a) {
  if (a.beta.size() != 2) throw std::invalid_argument("zeta: --beta takes re,im");
  Gamma2Config cfg;
  cfg.tol = a.tol;
  cfg.N = a.N < 0 ? default_barnes_n() : a.N;
  validate(cfg);
  Complex beta(a.beta[0], a.beta[1]);
  Json out = {{"beta", io::to_json(beta)}, {"N", cfg.N}, {"tol", cfg.tol},
              {"zeta", io::to_json(zeta_min(beta, cfg))}, {"zeta0", io::to_json(zeta0(cfg))}};
  if (a.check) {
    ZetaResiduals r = zeta_residuals(beta, cfg);
    bool ok = r.reflection < cfg.tol && r.product < cfg.tol && r.ratio < cfg.tol;
    out["residuals"] = {{"reflection", r.reflection}, {"product", r.product}, {"ratio", r.ratio}};
    out["ok"] = ok;
    emit(out);
    if (!ok) throw VerificationFailure("zeta: functional equation residual above tolerance");
    return;
  }
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial towers, free-module bases, characters and the minimal form factor."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "indented JSON and readable polynomial text");

  BasisArgs basis;
  auto* c_basis = app.add_subcommand("basis",
      "Basis of U_{2n,l}: wedges v_I ^ w_J ^ xi_K with |I| + |J| + 2|K| = l, printed with deg1 and x-coefficients.");
  c_basis->add_option("--two-n", basis.two_n, "particle number 2n")->required();
  c_basis->add_option("--ell", basis.ell, "exterior degree l")->required();

  ResidueArgs residue;
  auto* c_res = app.add_subcommand("residue-check",
      "Checks rho_+(P) = rho_-(P) = 0, where rho substitutes (x_{2n-1}, x_{2n}) = (x, -x) and X_l = +-1/x, "
      "for every basis element of U_{2n,l} and for Xi_1 (l = 1) or Xi_2 (l = 2).");
  c_res->add_option("--two-n", residue.two_n, "particle number 2n")->required();
  c_res->add_option("--ell", residue.ell, "exterior degree l")->required();
  c_res->add_flag("!--no-xi", residue.include_xi, "skip Xi_1 / Xi_2");

  QuotientArgs quotient;
  auto* c_q = app.add_subcommand("quotient-char",
      "Graded dimensions of U_{2n,l} / (Xi_1 ^ U_{2n,l-1} + Xi_2 ^ U_{2n,l-2}) by exact linear algebra, as a series in "
      "q^{deg1 + n^2}; optionally compared with q^{n^2/4} ([n,l]_q - [n,l-1]_q) / [n]_q! at n = 2n.");
  c_q->add_option("--two-n", quotient.two_n, "particle number 2n")->required();
  c_q->add_option("--ell", quotient.ell, "exterior degree l")->required();
  c_q->add_option("--max-deg", quotient.max_deg, "largest deg1 computed (default 8)");
  c_q->add_flag("--compare-branching", quotient.compare, "compare with the branching-function summand");

  TowerArgs build, check;
  auto* c_build = app.add_subcommand("tower-build",
      "Level 2n of the tower P_2n = c_2n E_odd(t) prod_i Q(z_i) v_I ^ w_J ^ xi_K prod_{a>r} X_a^{2n+1+2r-2a} "
      "(anti-chiral: inverted variables and tail X_a^{2(a-r)-1}), as (alpha, gamma) components.");
  add_tower_options(c_build, build);
  c_build->add_option("--n", build.n, "level index n (particle number 2n)")->required();
  c_build->add_flag("--hat", build.hat, "anti-chiral hat form, a polynomial in 1/X");
  c_build->add_flag("--e-basis", build.e_basis, "write coefficients in e_1..e_2n instead of x");

  auto* c_check = app.add_subcommand("tower-check",
      "For n = m+1..n-max: Asym(bar P_2n) = Asym(prod_{a<l} (1 - x^2 X_a^2) P'_2n) and "
      "P'_2n at X_l = +-1/x equals +-x^{-(2n-1)} d_2n P_{2n-2}, plus c_2n / c_{2n-2} = (-1)^{n-m-1} d_2n.");
  add_tower_options(c_check, check);
  c_check->add_option("--n-max", check.n_max, "largest level checked (default 2)");

  DecomposeArgs decompose;
  auto* c_dec = app.add_subcommand("decompose-odd",
      "Writes a symmetric polynomial f(x_1..x_n) as sum g(p_1, p_3, ...) h_{2r_1} ... h_{2r_{n'}}, n' = floor(n/2), "
      "with 0 <= r_1 <= ... <= r_{n'}.");
  c_dec->add_option("--poly", decompose.poly, "polynomial JSON {\"vars\", \"terms\": [{\"exp\", \"num\", \"den\"}]}");
  c_dec->add_option("--file", decompose.file, "read the polynomial JSON from a file, - for stdin");

  ZetaArgs zeta;
  auto* c_zeta = app.add_subcommand("zeta",
      "Minimal form factor zeta(beta) from the Barnes double gamma function with periods (2pi, 2pi). --check-eqs "
      "reports |zeta(beta-2pi i) - zeta(-beta)|, |zeta(beta) zeta(beta-pi i) - (2pi)^{3/2}/(Gamma((pi-i beta)/2pi) "
      "Gamma(i beta/2pi))| and |zeta(-beta)/zeta(beta) - S_0(beta)|. Default N from FFALG_BARNES_N, else 200.");
  c_zeta->add_option("--beta", zeta.beta, "rapidity re,im")->delimiter(',')->expected(2);
  c_zeta->add_option("--tol", zeta.tol, "tolerance for residuals and pole proximity (default 1e-6)");
  c_zeta->add_option("--N", zeta.N, "lattice rows summed exactly");
  c_zeta->add_flag("--check-eqs", zeta.check, "evaluate the three functional equations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_basis) run_basis(basis);
    else if (*c_res) run_residue(residue);
    else if (*c_q) run_quotient(quotient);
    else if (*c_build) run_tower_build(build);
    else if (*c_check) run_tower_check(check);
    else if (*c_dec) run_decompose(decompose);
    else if (*c_zeta) run_zeta(zeta);
  } catch (const VerificationFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
