#include "json_io.hpp"

#include <stdexcept>

namespace ffalg::io {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f)
    terms.push_back({{"exp", m.to_vector()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"vars", f.nvars()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON needs \"vars\" and \"terms\"");
  const int n = j.at("vars").get<int>();
  if (n < 0 || n > Monomial::kMaxVars) throw std::invalid_argument("polynomial JSON: bad variable count");
  LaurentPoly f(n);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("polynomial JSON: exponent length mismatch");
    auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()); };
    std::string den = t.contains("den") ? text(t.at("den")) : "1";
    f.add_term(Monomial(e), make_rational(text(t.at("num")), den));
  }
  return f;
}

Json to_json(const WedgeElem& w, const SymContext& ctx) {
  Json terms = Json::array();
  for (const auto& [m, c] : w.terms())
    terms.push_back({{"X_exps", m.to_vector()}, {"coeff", to_json(ctx.expand(c))}});
  return {{"n", w.n()}, {"ell", w.ell()}, {"inverted", w.inverted()}, {"terms", terms}};
}

Json to_json(const BasisIndex& idx) { return {{"I", idx.I}, {"J", idx.J}, {"K", idx.K}}; }

Json to_json(const ConstScalar& c) {
  Json terms = Json::array();
  for (const auto& [k, g] : c.terms())
    terms.push_back({{"pi", k.first}, {"zeta0", k.second}, {"re", to_json(g.re)}, {"im", to_json(g.im)}});
  return {{"terms", terms}};
}

Json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const QSeries& s) {
  return {{"shift", to_json(s.shift())}, {"coeffs", s.coeffs()}, {"order", s.order()}, {"text", s.to_text()}};
}

Json to_json(const GradedDims& d) {
  Json dims = Json::array();
  for (int k = 0; k <= d.max_degree; ++k) dims.push_back(d.at(k));
  return {{"max_deg1", d.max_degree}, {"dims_by_deg1", dims}};
}

Json to_json(const OddDecomposition& d) {
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    std::vector<std::string> names;
    for (int j = 0; j < s.coeff.nvars(); ++j) names.push_back("p" + std::to_string(2 * j + 1));
    summands.push_back({{"h_indices", s.h_indices}, {"coeff", to_json(s.coeff)}, {"coeff_text", to_text(s.coeff, names)}});
  }
  return {{"n", d.n}, {"summands", summands}};
}

namespace {

Json alpha_json(const std::vector<int>& alpha, const std::vector<int>& t_indices) {
  Json a = Json::object();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i]) a["t" + std::to_string(t_indices[i])] = alpha[i];
  return a;
}

}  // namespace

Json to_json(const TowerLevel& level, const TowerSpec& spec, bool expand) {
  SymContext ctx(level.two_n, level.basis);
  Json entries = Json::array();
  for (const auto& [key, p] : level.entries) {
    Json terms = Json::array();
    for (const auto& [m, c] : p)
      terms.push_back({{"X_exps", m.to_vector()}, {"coeff", to_json(expand ? ctx.expand(c) : c)}});
    entries.push_back({{"alpha", alpha_json(key.alpha, spec.t_indices)},
                       {"gamma", key.gamma},
                       {"spin", spin(spec, key.alpha, key.gamma)},
                       {"poly", {{"ell", level.ell}, {"terms", terms}}}});
  }
  return {{"two_n", level.two_n},
          {"ell", level.ell},
          {"chirality", level.chirality == Chirality::Chiral ? "chiral" : "antichiral"},
          {"form", level.form == LevelForm::Hat ? "hat" : "plain"},
          {"coefficients", expand ? "x" : "e"},
          {"constant", to_json(level.constant)},
          {"x_exponent_range", {level.min_x_exponent, level.max_x_exponent}},
          {"entries", entries}};
}

Json to_json(const ConditionReport& r, const TowerSpec& spec) {
  Json j = {{"two_n", r.two_n}, {"cond1_ok", r.cond1_ok}, {"cond2_ok", r.cond2_ok}};
  if (r.witness) {
    j["witness"] = {{"condition", r.witness->condition},
                    {"alpha", alpha_json(r.witness->key.alpha, spec.t_indices)},
                    {"gamma", r.witness->key.gamma},
                    {"sign", r.witness->sign},
                    {"monomial", r.witness->monomial}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace ffalg::io
