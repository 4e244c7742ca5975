#include "nijkit/io.hpp"

#include "nijkit/error.hpp"
#include "nijkit/parser.hpp"

namespace nijkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

unsigned natural(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 65535)
    bad(std::string(what) + " must be non-negative integers");
  return j.get<unsigned>();
}

json poly_terms(const Poly& p) {
  json out = json::array();
  for (const Term& t : p.terms()) {
    json e = json::array();
    for (std::size_t v = 0; v < p.nvars(); ++v) e.push_back(t.mono[v]);
    out.push_back(json::array({rational_to_pq(t.coef), e}));
  }
  return out;
}

Poly poly_from_terms(const json& j, std::size_t nvars) {
  if (!j.is_array()) bad("polynomial terms must be an array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array()) bad("a term is [\"p/q\", [exponents...]]");
    if (t[1].size() != nvars) bad("exponent vector has the wrong length");
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      m.set(v, natural(t[1][v], "exponents"));
    }
    terms.push_back({m, rational_from_json(t[0])});
  }
  return Poly::from_terms(nvars, std::move(terms));
}

const json& member(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (j.contains(k)) return j.at(k);
  bad(std::string("missing field \"") + *keys.begin() + "\"");
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational as \"p/q\" or an integer");
}

json rational_to_json(const Rational& q) { return rational_to_pq(q); }

std::vector<Rational> point_from_json(const json& j) {
  if (!j.is_array()) bad("a point is an array of rationals");
  std::vector<Rational> p;
  for (const auto& e : j) p.push_back(rational_from_json(e));
  return p;
}

Chart chart_from_json(const json& j) {
  if (!j.is_array()) bad("a chart is an array of coordinate names");
  std::vector<std::string> names;
  for (const auto& e : j) {
    if (!e.is_string()) bad("coordinate names must be strings");
    names.push_back(e.get<std::string>());
  }
  return Chart(names);
}

json scalar_to_json(const ScalarField& f) {
  return {{"chart", f.chart().names()}, {"num", poly_terms(f.num())}, {"den", poly_terms(f.den())}};
}

ScalarField scalar_from_json(const json& j, const Chart& chart) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), chart);
  if (j.is_number_integer()) return ScalarField(chart, Rational(j.get<long>()));
  if (!j.is_object()) bad("a scalar is an expression string or {chart, num, den}");
  Chart c = j.contains("chart") ? chart_from_json(j.at("chart")) : chart;
  Poly num = poly_from_terms(member(j, {"num"}), c.size());
  Poly den = j.contains("den") ? poly_from_terms(j.at("den"), c.size()) : Poly::constant(c.size(), Rational(1));
  ScalarField f(c, num, den);
  return c == chart ? f : f.rechart(chart);
}

json matrix_to_json(const ScalarMatrix& m) { return to_strings(m); }

ScalarMatrix matrix_from_json(const json& j, const Chart& chart) {
  if (!j.is_array() || j.empty()) bad("a matrix is a non-empty array of rows");
  const std::size_t rows = j.size(), cols = j[0].is_array() ? j[0].size() : 0;
  ScalarMatrix m(chart, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], chart);
  }
  return m;
}

json form_to_json(const KForm& w) {
  json comps = json::object();
  for (const auto& [idx, c] : w.comps()) {
    std::string key;
    for (std::size_t k = 0; k < idx.size(); ++k) key += (k ? "," : "") + std::to_string(idx[k] + 1);
    comps[key] = scalar_to_json(c);
  }
  return {{"degree", w.degree()}, {"chart", w.chart().names()}, {"comps", comps}};
}

KForm form_from_json(const json& j, const Chart& fallback) {
  if (!j.is_object()) bad("a form is an object {degree, chart, comps}");
  Chart c = j.contains("chart") ? chart_from_json(j.at("chart")) : fallback;
  const json& deg = member(j, {"degree"});
  const unsigned k = natural(deg, "form degree");
  if (k > kMaxFormDegree) bad("form degree must be 0..3");
  KForm w(c, k);
  const json& comps = j.contains("comps") ? j.at("comps") : json::object();
  if (!comps.is_object()) bad("form components must be an object");
  for (const auto& [key, val] : comps.items()) {
    std::vector<std::size_t> idx;
    std::size_t pos = 0;
    while (pos <= key.size()) {
      const std::size_t comma = key.find(',', pos);
      const std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(part, &used);
      } catch (const std::exception&) {
        bad("bad component index \"" + key + "\"");
      }
      if (used != part.size() || v < 1 || v > c.size()) bad("component index out of range in \"" + key + "\"");
      idx.push_back(v - 1);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (idx.size() != k) bad("component \"" + key + "\" does not match the degree");
    if (k == 0) bad("use an empty key only for functions");
    w.add(idx, scalar_from_json(val, c));
  }
  if (k == 0 && j.contains("value")) w = KForm::function(scalar_from_json(j.at("value"), c));
  return w;
}

json pair_to_json(const PNPair& p) {
  return {{"n", p.n()}, {"chart", p.chart().names()}, {"omega", form_to_json(p.omega)}, {"L", matrix_to_json(p.L.matrix())}};
}

PNPair pair_from_json(const json& j) {
  if (!j.is_object()) bad("a pair is an object {n, chart, omega, L}");
  Chart c = j.contains("chart") ? chart_from_json(j.at("chart"))
                                : chart_from_json(member(j, {"omega"}).at("chart"));
  PNPair p{form_from_json(member(j, {"omega"}), c), OperatorField(matrix_from_json(member(j, {"L"}), c))};
  require_same_chart(p.omega.chart(), p.L.chart(), "pair");
  if (p.omega.degree() != 2) bad("omega must be a 2-form");
  if (j.contains("n") && j.at("n") != p.n()) bad("\"n\" disagrees with the operator size");
  return p;
}

json series_to_json(const TruncatedSeries& s) {
  json base = json::array();
  for (const auto& q : s.base_point()) base.push_back(rational_to_pq(q));
  return {{"chart", s.chart().names()}, {"base", base}, {"order", s.order()}, {"terms", poly_terms(s.body())}};
}

TruncatedSeries series_from_json(const json& j) {
  if (!j.is_object()) bad("a series is an object {chart, base, order, terms}");
  Chart c = chart_from_json(member(j, {"chart"}));
  std::vector<Rational> base = point_from_json(member(j, {"base"}));
  if (base.size() != c.size()) bad("series base point has the wrong dimension");
  const json& ord = member(j, {"order"});
  const unsigned order = natural(ord, "series order");
  Poly body = poly_from_terms(j.contains("terms") ? j.at("terms") : json::array(), c.size());
  return TruncatedSeries(c, base, order, body.truncated(order));
}

json upoly_to_json(const UPoly& p) { return to_string(p, "t"); }

OperatorField operator_from_json(const json& j) {
  if (!j.is_object()) bad("an operator file is an object {chart, operator}");
  Chart c = chart_from_json(member(j, {"chart"}));
  return OperatorField(matrix_from_json(member(j, {"operator", "L", "A", "matrix"}), c));
}

}  // namespace nijkit::io
