#include <sstream>

#include "nijkit/app.hpp"
#include "nijkit/error.hpp"
#include "nijkit/parser.hpp"
#include "nijkit/turiel.hpp"

namespace nijkit::app {

using namespace nijkit::io;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string matrix_text(const ScalarMatrix& m, const std::string& indent = "  ") {
  std::string out;
  for (const auto& row : to_strings(m)) out += indent + "[" + join(row, ", ") + "]\n";
  return out;
}

Status check(bool ok) { return ok ? Status::Ok : Status::CheckFailed; }

}  // namespace

Report error_report(const std::string& verb, const std::exception& e) {
  Report r;
  json err;
  if (auto* ne = dynamic_cast<const Error*>(&e)) {
    err = {{"code", std::string(to_string(ne->code()))}, {"message", ne->what()}};
    if (!ne->stage().empty()) err["stage"] = ne->stage();
    if (is_input_error(ne->code()))
      r.status = Status::InputError;
    else if (ne->code() == ErrorCode::ResidualFailure || ne->code() == ErrorCode::Internal)
      r.status = Status::Internal;
    else
      r.status = Status::CheckFailed;
  } else if (dynamic_cast<const json::exception*>(&e)) {
    err = {{"code", "Parse"}, {"message", e.what()}};
    r.status = Status::InputError;
  } else {
    err = {{"code", "Internal"}, {"message", e.what()}};
    r.status = Status::Internal;
  }
  r.data = {{"verb", verb}, {"ok", false}, {"error", err}};
  r.text = verb + ": " + err["code"].get<std::string>();
  if (err.contains("stage")) r.text += " at stage " + err["stage"].get<std::string>();
  r.text += "\n  " + err["message"].get<std::string>() + "\n";
  return r;
}

Report torsion(const json& input) {
  return guarded("torsion", [&] {
    const OperatorField L = operator_from_json(input);
    const TorsionTensor N = nijkit::torsion(L);
    const auto nz = N.nonzero_components();
    Report r;
    r.status = check(nz.empty());
    r.data = {{"verb", "torsion"}, {"ok", nz.empty()}, {"chart", L.chart().names()},
              {"operator", matrix_to_json(L.matrix())}, {"nijenhuis", nz.empty()}, {"nonzero", nz}};
    r.text = nz.empty() ? "torsion vanishes identically\n" : "torsion has " + std::to_string(nz.size()) +
                                                                 " nonzero components:\n  " + join(nz, "\n  ") + "\n";
    return r;
  });
}

namespace {

json certification(const PNPair& p, std::string& text, bool& ok) {
  const CompatibilityReport c = check_compatibility(p);
  const auto nz = nijkit::torsion(p.L).nonzero_components();
  ok = c.ok() && nz.empty();
  std::vector<std::string> violations = c.violations;
  for (const auto& v : nz) violations.push_back("torsion " + v);
  auto yes = [](bool b) { return b ? "yes" : "NO"; };
  text += std::string("  omega nondegenerate: ") + yes(c.omega_nondegenerate) + "\n  omega closed: " +
          yes(c.omega_closed) + "\n  omega(L., .) skew: " + yes(c.skew) + "\n  omega(L., .) closed: " +
          yes(c.tilde_closed) + "\n  L Nijenhuis: " + yes(nz.empty()) + "\n";
  for (const auto& v : violations) text += "  violation: " + v + "\n";
  return {{"omega_nondegenerate", c.omega_nondegenerate}, {"omega_closed", c.omega_closed}, {"skew", c.skew},
          {"tilde_closed", c.tilde_closed}, {"nijenhuis", nz.empty()}, {"violations", violations}};
}

}  // namespace

Report certify_pair(const json& input) {
  return guarded("certify-pair", [&] {
    const PNPair p = pair_from_json(input);
    Report r;
    bool ok = false;
    r.text = "pair on (" + join(p.chart().names(), ", ") + ")\n";
    json cert = certification(p, r.text, ok);
    r.status = check(ok);
    r.data = {{"verb", "certify-pair"}, {"ok", ok}, {"certification", cert}};
    return r;
  });
}

Report canonical(std::size_t n, bool certify) {
  return guarded("canonical", [&] {
    if (n < 1 || n > 8) throw Error(ErrorCode::InvalidArgument, "n must be between 1 and 8");
    const CanonicalPN c = build_canonical(n);
    Report r;
    r.data = {{"verb", "canonical"}, {"ok", true}, {"pair", pair_to_json(c.pair)},
              {"A", matrix_to_json(c.A)}, {"S", matrix_to_json(c.S)}};
    r.text = "canonical pair, n = " + std::to_string(n) + "\nA =\n" + matrix_text(c.A) + "S =\n" + matrix_text(c.S);
    if (certify) {
      bool ok = false;
      r.text += "certification:\n";
      r.data["certification"] = certification(c.pair, r.text, ok);
      r.data["ok"] = ok;
      r.status = check(ok);
    }
    return r;
  });
}

Report turiel(const json& input) {
  return guarded("turiel", [&] {
    const OperatorField A = operator_from_json(input);
    const TurielExtension e = turiel_extend(A);
    const PNPair p{canonical_omega(e.L_ext.chart()), e.L_ext};
    Report r;
    r.status = check(e.certified);
    r.data = {{"verb", "turiel"}, {"ok", e.certified}, {"certified", e.certified}, {"S", matrix_to_json(e.S)},
              {"pair", pair_to_json(p)}};
    r.text = "extension to (" + join(e.L_ext.chart().names(), ", ") + ")\nS =\n" + matrix_text(e.S) +
             (e.certified ? "base operator is Nijenhuis; extension certified Nijenhuis and compatible\n"
                          : "base operator is not Nijenhuis; extension built but not certified\n");
    return r;
  });
}

Report companion_convert(std::size_t n) {
  return guarded("companion-convert", [&] {
    if (n < 1 || n > 6) throw Error(ErrorCode::InvalidArgument, "n must be between 1 and 6");
    const CompanionConversion c = first_to_second_companion(n);
    json fwd = json::array(), inv = json::array();
    Report r;
    r.text = "x -> y:\n";
    for (std::size_t k = 0; k < n; ++k) {
      fwd.push_back(to_string(c.forward[k]));
      r.text += "  " + c.y_chart.name(k) + " = " + to_string(c.forward[k]) + "\n";
    }
    r.text += "y -> x:\n";
    for (std::size_t k = 0; k < n; ++k) {
      inv.push_back(to_string(c.inverse[k]));
      r.text += "  " + c.x_chart.name(k) + " = " + to_string(c.inverse[k]) + "\n";
    }
    r.text += "A in y coordinates:\n" + matrix_text(c.A_second.matrix());
    r.data = {{"verb", "companion-convert"}, {"ok", true}, {"x_chart", c.x_chart.names()},
              {"y_chart", c.y_chart.names()}, {"forward", fwd}, {"inverse", inv},
              {"A_first", matrix_to_json(c.A_first.matrix())}, {"A_second", matrix_to_json(c.A_second.matrix())}};
    return r;
  });
}

Report solve_diagonal(const json& input) {
  return guarded("solve-diagonal", [&] {
    const Chart c = chart_from_json(field(input, "chart"));
    DiagonalProblem p;
    for (const auto& l : field(input, "lambdas")) p.lambdas.push_back(scalar_from_json(l, c));
    p.omega = form_from_json(field(input, "omega"), c);
    const ScalarField U0 = nijkit::solve_diagonal(p);
    Report r;
    r.data = {{"verb", "solve-diagonal"}, {"ok", true}, {"U0", to_string(U0)}, {"U0_exact", scalar_to_json(U0)}};
    r.text = "particular solution U0 = " + to_string(U0) + "\n";
    json g = json::object();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const ScalarField gij = p.omega.component({i, j}) / (p.lambdas[j] - p.lambdas[i]);
        g[std::to_string(i + 1) + "," + std::to_string(j + 1)] = to_string(gij);
        r.text += "  U_" + c.name(i) + c.name(j) + " = " + to_string(gij) + "\n";
      }
    r.data["mixed_derivatives"] = g;
    if (input.contains("homogeneous")) {
      std::vector<UPoly> u;
      for (const auto& coeffs : input.at("homogeneous")) u.push_back(UPoly::from_rationals(point_from_json(coeffs)));
      const ScalarField U = add_homogeneous(p, U0, u);
      r.data["U"] = to_string(U);
      r.data["U_exact"] = scalar_to_json(U);
      r.text += "with homogeneous terms U = " + to_string(U) + "\n";
    }
    r.text += "verified: d(A* dU) = Omega exactly\n";
    return r;
  });
}

namespace {

TruncatedSeries line_series(const json& j, const Chart& c, const std::vector<Rational>& pt, unsigned order) {
  if (j.is_object() && j.contains("terms")) return series_from_json(j);
  std::vector<std::size_t> line;
  for (std::size_t v = 0; v + 1 < c.size(); ++v) line.push_back(v);
  const ScalarField f = scalar_from_json(j, c);
  for (std::size_t v : line)
    if (f.depends_on(v))
      throw Error(ErrorCode::InvalidArgument, "initial data must depend on " + c.name(c.size() - 1) + " only");
  return series_from_scalar(f, pt, order);
}

json certificate_json(const CompatibilityCertificate& c) {
  return {{"compatible", c.compatible}, {"identities_checked", c.identities_checked}, {"violations", c.violations}};
}

}  // namespace

Report solve_canonical(const json& input) {
  return guarded("solve-canonical", [&] {
    const unsigned order = input.contains("order") ? input.at("order").get<unsigned>() : kDefaultOrder;
    if (order < 2 || order > 24) throw Error(ErrorCode::InvalidArgument, "order must be between 2 and 24");
    Report r;
    if (input.contains("pair")) {
      const PNPair p = pair_from_json(input.at("pair"));
      const std::vector<Rational> pt = point_from_json(field(input, "point"));
      std::optional<ScalarField> initial;
      if (input.contains("initial")) initial = scalar_from_json(field(input.at("initial"), "U"), p.chart());
      const CanonicalizationResult res = solve_canonicalization(p, pt, order, initial);
      r.data = {{"verb", "solve-canonical"}, {"ok", true}, {"T", matrix_to_json(res.T)},
                {"compatibility", certificate_json(res.compatibility)}, {"U", series_to_json(res.U)},
                {"U_polynomial", to_string(res.U.to_scalar())},
                {"residual_degree", res.residual_degree ? json(*res.residual_degree) : json(nullptr)}};
      r.text = "T = S_hat - S:\n" + matrix_text(res.T) + "compatibility: " +
               std::to_string(res.compatibility.identities_checked) + " identities hold\nU = " +
               to_string(res.U.to_scalar()) + "  (through order " + std::to_string(order) + ")\n" +
               (res.residual_degree ? "S~ - S starts at total degree " + std::to_string(*res.residual_degree)
                                    : std::string("S~ - S vanishes exactly")) +
               "\n";
      return r;
    }
    const Chart c = chart_from_json(field(input, "chart"));
    const OperatorField A(matrix_from_json(field(input, "A"), c));
    const KForm omega = form_from_json(field(input, "Omega"), c);
    const std::vector<Rational> pt = point_from_json(field(input, "point"));
    const SolvedForm sf = reduce_to_solved_form(A, omega, pt);
    const CompatibilityCertificate cert = check_compatibility_conditions(sf);
    if (!cert.compatible) {
      r.status = Status::CheckFailed;
      r.data = {{"verb", "solve-canonical"}, {"ok", false}, {"compatibility", certificate_json(cert)}};
      r.text = "compatibility conditions fail:\n  " + join(cert.violations, "\n  ") + "\n";
      return r;
    }
    SecondOrderInitial in = zero_initial(sf, order);
    if (input.contains("initial")) {
      const json& ij = input.at("initial");
      if (ij.contains("U")) {
        in = initial_from(sf, scalar_from_json(ij.at("U"), c), order);
      } else {
        if (ij.contains("v")) in.v = line_series(ij.at("v"), c, pt, order);
        if (ij.contains("grad")) {
          if (ij.at("grad").size() + 1 != c.size())
            throw Error(ErrorCode::InvalidArgument, "\"grad\" needs n-1 entries");
          for (std::size_t s = 0; s + 1 < c.size(); ++s) in.grad[s] = line_series(ij.at("grad")[s], c, pt, order);
        }
      }
    }
    const TruncatedSeries U = cauchy_series_solve(sf, in, order);
    json h = json::object();
    for (std::size_t a = 0; a + 1 < c.size(); ++a)
      for (std::size_t b = a; b + 1 < c.size(); ++b)
        h[std::to_string(a + 1) + "," + std::to_string(b + 1)] = to_string(sf.h[a][b]);
    r.data = {{"verb", "solve-canonical"}, {"ok", true}, {"solved_form", h},
              {"compatibility", certificate_json(cert)}, {"U", series_to_json(U)},
              {"U_polynomial", to_string(U.to_scalar())}};
    r.text = "solved form:\n";
    for (const auto& [k, v] : h.items()) r.text += "  U_" + k + " = " + v.get<std::string>() + "\n";
    r.text += "compatibility: " + std::to_string(cert.identities_checked) + " identities hold\nU = " +
              to_string(U.to_scalar()) + "  (through order " + std::to_string(order) +
              ", residual zero through order " + std::to_string(order - 2) + ")\n";
    return r;
  });
}

Report diagnostics(const json& input) {
  return guarded("diagnostics", [&] {
    const OperatorField L = operator_from_json(input);
    const std::vector<Rational> pt = point_from_json(field(input, "point"));
    if (pt.size() != L.dim()) throw Error(ErrorCode::InvalidArgument, "point has the wrong dimension");
    const PointDiagnostics d = point_diagnostics(L, pt);
    json pj = json::array(), inv = json::array(), segre = json::array();
    for (const auto& q : d.point) pj.push_back(rational_to_pq(q));
    for (const auto& f : d.invariant_factors) inv.push_back(upoly_to_json(f));
    for (const auto& s : d.segre)
      segre.push_back({{"factor", upoly_to_json(s.factor)}, {"multiplicity", s.multiplicity}, {"ranks", s.ranks}});
    Report r;
    r.data = {{"verb", "diagnostics"},
              {"ok", true},
              {"point", pj},
              {"gl_regular", d.gl_regular},
              {"char_poly", upoly_to_json(d.char_poly_at_point)},
              {"invariant_factors", inv},
              {"trace_rank", {{"half", d.trace_rank_half}, {"full", d.trace_rank_full}}},
              {"diff_nondegenerate_half", d.diff_nondegenerate_half},
              {"kostant_agreement", d.kostant_agreement},
              {"segre", segre}};
    std::ostringstream t;
    t << "char poly at point: " << to_string(d.char_poly_at_point, "t") << "\n"
      << "gl-regular: " << (d.gl_regular ? "yes" : "no") << "\n"
      << "invariant factors:";
    for (const auto& f : d.invariant_factors) t << " (" << to_string(f, "t") << ")";
    t << "\ntrace differentials: rank " << d.trace_rank_half << " (first half), " << d.trace_rank_full << " (all)\n";
    if (input.contains("omega")) {
      const PNPair p{form_from_json(input.at("omega"), L.chart()), L};
      try {
        json tags = json::array();
        for (const auto& b : classify_semisimple_block(p, pt)) {
          tags.push_back({{"factor", upoly_to_json(b.factor)}, {"multiplicity", b.multiplicity},
                          {"complex_pair", b.complex_pair}, {"eigenvalue_constant", b.eigenvalue_constant},
                          {"type", std::string(to_string(b.type))}});
          t << "block " << to_string(b.factor, "t") << "^" << b.multiplicity << ": " << to_string(b.type) << "\n";
        }
        r.data["blocks"] = tags;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSemisimpleAtPoint) throw;
        r.data["blocks"] = nullptr;
        r.data["blocks_note"] = e.what();
        t << "blocks: " << e.what() << "\n";
      }
    }
    r.text = t.str();
    return r;
  });
}

}  // namespace nijkit::app
