#include <functional>

#include "nijkit/app.hpp"
#include "nijkit/error.hpp"
#include "nijkit/parser.hpp"
#include "nijkit/random.hpp"
#include "nijkit/turiel.hpp"

namespace nijkit::app {

using namespace nijkit::io;

namespace {

// Each preset fills `data` and `text` and returns whether every assertion held.
using Body = std::function<bool(json& data, std::string& text, std::uint64_t seed)>;

struct Preset {
  PresetInfo info;
  Body body;
};

Chart numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return Chart(v);
}

std::vector<ScalarField> coordinates(const Chart& c) {
  std::vector<ScalarField> v;
  for (std::size_t i = 0; i < c.size(); ++i) v.push_back(ScalarField::variable(c, i));
  return v;
}

std::string mark(bool ok) { return ok ? "ok" : "FAILED"; }

bool canonical_n(std::size_t n, json& data, std::string& text) {
  const CanonicalPN c = build_canonical(n);
  const bool nij = nijkit::torsion(c.pair.L).is_zero();
  const CompatibilityReport rep = check_compatibility(c.pair);
  data = {{"n", n}, {"pair", pair_to_json(c.pair)}, {"torsion_zero", nij}, {"skew", rep.skew},
          {"tilde_closed", rep.tilde_closed}, {"omega_closed", rep.omega_closed}};
  text += "n = " + std::to_string(n) + ": torsion " + mark(nij) + ", skew " + mark(rep.skew) + ", closed " +
          mark(rep.tilde_closed) + "\n";
  return nij && rep.ok();
}

// sigma_1..sigma_5 as displayed in the source table, typed in verbatim.
const char* const kSigmaTable[5] = {
    "y1",
    "y2 + 1/2*y1^2",
    "y3 + y1*y2 + 1/6*y1^3",
    "y4 + 1/24*y1^4 + 1/2*y2*y1^2 + y1*y3 + 1/2*y2^2",
    "y5 + 1/120*y1^5 + 1/6*y2*y1^3 + 1/2*y3*y1^2 + 1/2*y1*y2^2 + y1*y4 + y3*y2",
};

std::vector<Preset> catalog() {
  std::vector<Preset> ps;
  for (std::size_t n = 1; n <= 4; ++n)
    ps.push_back({{"canonical-n" + std::to_string(n),
                   "canonical pair for n = " + std::to_string(n) + ": torsion and both compatibility conditions"},
                  [n](json& d, std::string& t, std::uint64_t) { return canonical_n(n, d, t); }});

  ps.push_back({{"turiel-first-companion",
                 "extension of the first companion form (sigma_i = x_i) reproduces the canonical coupling block"},
                [](json& d, std::string& t, std::uint64_t) {
                  bool ok = true;
                  d = json::array();
                  for (std::size_t n = 1; n <= 4; ++n) {
                    const TurielExtension e = turiel_extend(first_companion(coordinates(numbered("x", n))));
                    const bool same = e.S == build_canonical(n).S && e.certified;
                    ok = ok && same;
                    d.push_back({{"n", n}, {"S", matrix_to_json(e.S)}, {"matches", same}});
                    t += "n = " + std::to_string(n) + ": S " + mark(same) + "\n";
                  }
                  return ok;
                }});

  ps.push_back({{"turiel-second-companion", "extension of the second companion form has S = 0"},
                [](json& d, std::string& t, std::uint64_t) {
                  bool ok = true;
                  d = json::array();
                  for (std::size_t n = 1; n <= 4; ++n) {
                    std::vector<ScalarField> sigma;
                    for (std::size_t k = 1; k <= n; ++k) sigma.push_back(newton_girard_sigma(k, numbered("y", n)));
                    const TurielExtension e = turiel_extend(second_companion(sigma));
                    const bool zero = e.S.is_zero() && e.certified;
                    ok = ok && zero;
                    d.push_back({{"n", n}, {"S_is_zero", zero}});
                    t += "n = " + std::to_string(n) + ": S = 0 " + mark(zero) + "\n";
                  }
                  return ok;
                }});

  ps.push_back({{"paper-sigma-table", "sigma_1..sigma_5 from power sums, diffed against the published table"},
                [](json& d, std::string& t, std::uint64_t) {
                  const Chart y = numbered("y", 5);
                  bool ok = true;
                  d = json::array();
                  for (std::size_t k = 1; k <= 5; ++k) {
                    const ScalarField got = newton_girard_sigma(k, y);
                    const ScalarField want = parse_scalar(kSigmaTable[k - 1], y);
                    const bool same = got == want;
                    ok = ok && same;
                    d.push_back({{"k", k}, {"computed", to_string(got)}, {"published", kSigmaTable[k - 1]},
                                 {"difference", to_string(got - want)}});
                    t += "sigma" + std::to_string(k) + " = " + to_string(got) + "  [" + mark(same) + "]\n";
                  }
                  return ok;
                }});

  ps.push_back({{"diagonal-solve",
                 "diagonal operator: mixed derivatives, third-derivative consistency and a particular solution"},
                [](json& d, std::string& t, std::uint64_t) {
                  bool ok = true;
                  d = json::array();
                  // n = 2 worked example and an n = 3 instance with Omega = d(A* dV)
                  for (std::size_t n = 2; n <= 3; ++n) {
                    const Chart y = numbered("y", n);
                    DiagonalProblem p{coordinates(y), KForm(y, 2)};
                    ScalarMatrix m(y, n, n);
                    for (std::size_t i = 0; i < n; ++i) m(i, i) = p.lambdas[i];
                    const OperatorField A(m);
                    if (n == 2)
                      p.omega.add({0, 1}, parse_scalar("y2 - y1", y));
                    else
                      p.omega = cohomological_lhs(A, parse_scalar("y1^2*y2*y3 + y2^3*y3", y));
                    const ScalarField U = nijkit::solve_diagonal(p);
                    json g = json::object();
                    t += "n = " + std::to_string(n) + "\n";
                    for (std::size_t i = 0; i < n; ++i)
                      for (std::size_t j = i + 1; j < n; ++j) {
                        const ScalarField gij = p.omega.component({i, j}) / (p.lambdas[j] - p.lambdas[i]);
                        g[std::to_string(i + 1) + "," + std::to_string(j + 1)] = to_string(gij);
                        t += "  U_y" + std::to_string(i + 1) + "y" + std::to_string(j + 1) + " = " + to_string(gij) + "\n";
                      }
                    const bool solved = cohomological_lhs(A, U) == p.omega;
                    ok = ok && solved && (n != 2 || U == parse_scalar("y1*y2", y));
                    t += "  U0 = " + to_string(U) + "  [" + mark(solved) + "]\n";
                    d.push_back({{"n", n}, {"omega", form_to_json(p.omega)}, {"mixed", g}, {"U0", to_string(U)},
                                 {"verified", solved}});
                  }
                  return ok;
                }});

  ps.push_back({{"prop1-counterexample", "equal eigenvalues: the diagonal solver reports EigenvalueCollision"},
                [](json& d, std::string& t, std::uint64_t) {
                  const Chart y = numbered("y", 2);
                  DiagonalProblem p{{parse_scalar("y1", y), parse_scalar("y1", y)}, KForm(y, 2)};
                  p.omega.add({0, 1}, ScalarField::one(y));
                  std::string code = "none";
                  try {
                    nijkit::solve_diagonal(p);
                  } catch (const Error& e) {
                    code = std::string(to_string(e.code()));
                    t += "reported: " + code + " (" + e.what() + ")\n";
                  }
                  d = {{"reported", code}};
                  return code == "EigenvalueCollision";
                }});

  ps.push_back({{"theorem2-round-trip",
                 "move the canonical pair by U* = x1^2*x2 and recover the inverse transform from the series solver"},
                [](json& d, std::string& t, std::uint64_t) {
                  const CanonicalPN c = build_canonical(2);
                  const ScalarField Us = parse_scalar("x1^2*x2", c.pair.chart());
                  const PNPair moved = generating_transform(Us, c.pair);
                  const std::vector<Rational> pt(4, Rational(0));
                  const auto res = solve_canonicalization(moved, pt, kDefaultOrder, -Us);
                  const bool back = !res.residual_degree && res.transformed.L == c.pair.L;
                  const auto zero = solve_canonicalization(moved, pt, kDefaultOrder);
                  const bool zero_ok = !zero.residual_degree || *zero.residual_degree + 1 >= kDefaultOrder;
                  d = {{"T", matrix_to_json(res.T)}, {"U_matched", to_string(res.U.to_scalar())},
                       {"U_zero_data", to_string(zero.U.to_scalar())}, {"exact_return", back},
                       {"zero_data_residual_degree",
                        zero.residual_degree ? json(*zero.residual_degree) : json(nullptr)}};
                  t += "T =\n";
                  for (const auto& row : to_strings(res.T)) {
                    t += " ";
                    for (const auto& e : row) t += " " + e;
                    t += "\n";
                  }
                  t += "matched data: U = " + to_string(res.U.to_scalar()) + ", returns to canonical [" + mark(back) +
                       "]\nzero data: U = " + to_string(zero.U.to_scalar()) + " [" + mark(zero_ok) + "]\n";
                  return back && zero_ok;
                }});

  ps.push_back({{"lemma-b1",
                 "second companion operators from potentials: torsion vanishes iff d(A* dy_n) and d(A*^2 dy_n) "
                 "vanish; plus the transported canonical pair"},
                [](json& d, std::string& t, std::uint64_t seed) {
                  RandomSource rng(seed);
                  int agree = 0, positive = 0, negative = 0;
                  bool ok = true;
                  for (int it = 0; it < 30; ++it) {
                    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
                    const ScalarField phi = rng.polynomial(numbered("y", n), it % 3 == 0 ? 1 : 3, 4);
                    const auto r = check_second_companion_nijenhuis(sigma_from_potential(phi));
                    if (r.holds() == r.torsion_zero) ++agree;
                    else ok = false;
                    (r.torsion_zero ? positive : negative)++;
                  }
                  json transport = json::array();
                  for (std::size_t n = 1; n <= 4; ++n) {
                    const auto conv = first_to_second_companion(n);
                    const PNPair moved = cotangent_transport(build_canonical(n).pair, conv.forward, conv.inverse);
                    const PNPair alt = build_alternative_canonical(n);
                    const bool same = moved.L == alt.L && moved.omega == alt.omega &&
                                      check_second_companion_nijenhuis(conv.inverse).holds();
                    ok = ok && same;
                    transport.push_back({{"n", n}, {"equal", same}});
                    t += "transported pair n = " + std::to_string(n) + " [" + mark(same) + "]\n";
                  }
                  d = {{"seed", seed}, {"instances", 30}, {"agreeing", agree}, {"nijenhuis", positive},
                       {"not_nijenhuis", negative}, {"transport", transport}};
                  t += std::to_string(agree) + "/30 instances agree (" + std::to_string(positive) + " Nijenhuis, " +
                       std::to_string(negative) + " not)\n";
                  return ok;
                }});

  ps.push_back({{"trace-identity", "(1/k) d tr A^k = (1/(k-1)) A* d tr A^(k-1) on the companion block; "
                                   "tr L^k = 2 tr A^k for the canonical pair"},
                [](json& d, std::string& t, std::uint64_t) {
                  bool ok = true;
                  d = json::array();
                  for (std::size_t n = 2; n <= 4; ++n) {
                    const Chart x = numbered("x", n);
                    const OperatorField A = first_companion(coordinates(x));
                    const auto diffs = trace_power_differentials(A, n);
                    for (std::size_t k = 2; k <= n; ++k) {
                      const ScalarField ck(x, Rational(1, static_cast<long>(k)));
                      const ScalarField ck1(x, Rational(1, static_cast<long>(k - 1)));
                      const bool holds = diffs[k - 1] * ck == pullback(A, diffs[k - 2]) * ck1;
                      ok = ok && holds;
                      d.push_back({{"n", n}, {"k", k}, {"holds", holds}});
                      t += "n = " + std::to_string(n) + ", k = " + std::to_string(k) + " [" + mark(holds) + "]\n";
                    }
                    const CanonicalPN c = build_canonical(n);
                    ScalarMatrix Lk = c.pair.L.matrix(), Ak = c.A;
                    for (std::size_t k = 1; k <= 2 * n; ++k) {
                      if (k > 1) {
                        Lk = Lk * c.pair.L.matrix();
                        Ak = Ak * c.A;
                      }
                      const bool tr = Lk.trace() == Ak.trace() * ScalarField(c.pair.chart(), Rational(2));
                      ok = ok && tr;
                      if (!tr) t += "tr L^" + std::to_string(k) + " != 2 tr A^" + std::to_string(k) + "\n";
                    }
                  }
                  return ok;
                }});
  return ps;
}

}  // namespace

std::vector<PresetInfo> preset_catalog() {
  std::vector<PresetInfo> out;
  for (const auto& p : catalog()) out.push_back(p.info);
  return out;
}

Report run_preset(const std::string& name, std::uint64_t seed) {
  return guarded("presets", [&] {
    for (const auto& p : catalog()) {
      if (p.info.name != name) continue;
      Report r;
      json details;
      std::string text = "preset " + name + ": " + p.info.description + "\n";
      const bool ok = p.body(details, text, seed);
      text += ok ? "PASS\n" : "FAIL\n";
      r.status = ok ? Status::Ok : Status::CheckFailed;
      r.text = text;
      r.data = {{"verb", "presets"}, {"preset", name}, {"ok", ok}, {"details", details}};
      return r;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown preset \"" + name + "\"");
  });
}

}  // namespace nijkit::app
