#pragma once

#include <json.hpp>

#include "ffalg/barnes.hpp"
#include "ffalg/qchar.hpp"
#include "ffalg/symring.hpp"
#include "ffalg/tower.hpp"
#include "ffalg/wedge.hpp"

namespace ffalg::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

// Coefficients are written in x; ctx converts from the Elementary basis when needed.
Json to_json(const WedgeElem& w, const SymContext& ctx);
Json to_json(const BasisIndex& idx);
Json to_json(const ConstScalar& c);
Json to_json(Complex z);
Json to_json(const QSeries& s);
Json to_json(const GradedDims& d);
Json to_json(const OddDecomposition& d);
// expand = true writes coefficients in x, otherwise in e_1..e_2n.
Json to_json(const TowerLevel& level, const TowerSpec& spec, bool expand);
Json to_json(const ConditionReport& r, const TowerSpec& spec);

}  // namespace ffalg::io
