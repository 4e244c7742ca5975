#pragma once

#include <json.hpp>

#include "nijkit/pdesolve.hpp"

namespace nijkit::io {

using json = nlohmann::json;

/// Rationals are "p/q" strings; plain JSON integers are accepted on input.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);
std::vector<Rational> point_from_json(const json& j);

Chart chart_from_json(const json& j);

/// {"chart": [...], "num": [["p/q", [e...]], ...], "den": [...]}. A plain
/// string is parsed as an expression on `chart`.
json scalar_to_json(const ScalarField& f);
ScalarField scalar_from_json(const json& j, const Chart& chart);

/// Rows of expression strings.
json matrix_to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const json& j, const Chart& chart);

/// {"degree": k, "chart": [...], "comps": {"1,2": scalar}}; indices are
/// 1-based. Entries may be expression strings.
json form_to_json(const KForm& w);
KForm form_from_json(const json& j, const Chart& fallback);

/// {"n": n, "chart": [...], "omega": form, "L": rows}.
json pair_to_json(const PNPair& p);
PNPair pair_from_json(const json& j);

/// {"chart", "base", "order", "terms": [["p/q", [e...]], ...]} in t = x - base.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json upoly_to_json(const UPoly& p);

/// Operator file: {"chart": [...], "operator": rows} ("L", "A" or "matrix"
/// also accepted).
OperatorField operator_from_json(const json& j);

}  // namespace nijkit::io
