#include <doctest.h>

#include "helpers.hpp"
#include "nijkit/error.hpp"
#include "nijkit/pdesolve.hpp"
#include "nijkit/random.hpp"

using namespace nijkit;
using testing_support::chart;
using testing_support::numbered_chart;
using testing_support::op;
using testing_support::S;

namespace {

KForm two_form(const Chart& c, std::initializer_list<std::tuple<std::size_t, std::size_t, const char*>> comps) {
  KForm w(c, 2);
  for (auto [i, j, e] : comps) w.add({i, j}, S(c, e));
  return w;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string stage_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.stage();
  }
  return "<none>";
}

std::vector<std::size_t> first(std::size_t n) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(i);
  return v;
}

OperatorField canonical_x(std::size_t n) {
  Chart xc = numbered_chart("x", n);
  return OperatorField(canonical_A(xc, n));
}

}  // namespace

TEST_CASE("diagonal solve: worked example and trivial input") {
  Chart c = chart({"y1", "y2"});
  DiagonalProblem p{{S(c, "y1"), S(c, "y2")}, two_form(c, {{0, 1, "y2 - y1"}})};
  CHECK(solve_diagonal(p) == S(c, "y1*y2"));
  DiagonalProblem zero{{S(c, "y1"), S(c, "y2")}, KForm(c, 2)};
  CHECK(solve_diagonal(zero).is_zero());
}

TEST_CASE("diagonal solve: obstructions") {
  Chart c = chart({"y1", "y2"});
  DiagonalProblem collide{{S(c, "y1"), S(c, "y1")}, two_form(c, {{0, 1, "1"}})};
  CHECK(code_of([&] { solve_diagonal(collide); }) == ErrorCode::EigenvalueCollision);

  DiagonalProblem mixed{{S(c, "y1 + y2"), S(c, "y2")}, two_form(c, {{0, 1, "1"}})};
  CHECK(code_of([&] { solve_diagonal(mixed); }) == ErrorCode::PreconditionFailed);

  // g_12 = 1/y1 would need log(y1)
  DiagonalProblem log_case{{S(c, "y1"), S(c, "y2")}, two_form(c, {{0, 1, "(y2 - y1)/y1"}})};
  CHECK(code_of([&] { solve_diagonal(log_case); }) == ErrorCode::NonIntegrableMonomial);

  DiagonalProblem rational_den{{S(c, "y1"), S(c, "y2")}, two_form(c, {{0, 1, "(y2 - y1)/(y1 + 1)"}})};
  CHECK(code_of([&] { solve_diagonal(rational_den); }) == ErrorCode::NonIntegrableMonomial);

  Chart c3 = chart({"y1", "y2", "y3"});
  DiagonalProblem open{{S(c3, "y1"), S(c3, "y2"), S(c3, "y3")}, two_form(c3, {{0, 1, "y3"}})};
  CHECK(code_of([&] { solve_diagonal(open); }) == ErrorCode::NotClosed);
}

TEST_CASE("diagonal solve: Laurent terms integrate") {
  Chart c = chart({"y1", "y2"});
  DiagonalProblem p{{S(c, "y1"), S(c, "y2")}, two_form(c, {{0, 1, "(y2 - y1)/y1^2"}})};
  ScalarField U = solve_diagonal(p);
  CHECK(U.partial(0).partial(1) == S(c, "1/y1^2"));
}

TEST_CASE("diagonal solve on random admissible right-hand sides") {
  RandomSource rng(seed_from_env(61));
  for (int it = 0; it < 12; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    Chart c = numbered_chart("y", n);
    ScalarMatrix m(c, n, n);
    std::vector<ScalarField> lambdas;
    for (std::size_t i = 0; i < n; ++i) lambdas.push_back(m(i, i) = ScalarField::variable(c, i));
    const OperatorField A(m);
    const ScalarField V = rng.polynomial(c, 4, 4);
    const KForm omega = cohomological_lhs(A, V);
    DiagonalProblem p{lambdas, omega};
    const ScalarField U = solve_diagonal(p);
    // (lambda_j - lambda_i) U_ij = omega_ij, checked by hand
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        CHECK((lambdas[j] - lambdas[i]) * U.partial(i).partial(j) == omega.component({i, j}));
    std::vector<UPoly> hom;
    for (std::size_t i = 0; i < n; ++i) hom.push_back(UPoly::from_rationals({Rational(int(i)), Rational(2), Rational(-1, 3)}));
    const ScalarField U2 = add_homogeneous(p, U, hom);
    CHECK(cohomological_lhs(A, U2) == omega);
    CHECK(U2 != U);
  }
}

TEST_CASE("solved form for n = 2 matches the hand elimination") {
  Chart c = numbered_chart("x", 2);
  const OperatorField A = canonical_x(2);
  RandomSource rng(7);
  const ScalarField w = rng.polynomial(c, 3, 4);
  KForm omega(c, 2);
  omega.add({0, 1}, w);
  const std::vector<Rational> pt{Rational(0), Rational(0)};
  SolvedForm sf = reduce_to_solved_form(A, omega, pt);
  const Chart& jc = sf.jets.chart;
  CHECK(jc.names() == std::vector<std::string>{"x1", "x2", "U_x1", "U_x2", "U_x1_x2", "U_x2_x2", "U_x1_x2_x2",
                                               "U_x2_x2_x2"});
  // U_11 = Omega_12 - x1 U_12 - x2 U_22 - U_2
  CHECK(sf.h[0][0] == w.rechart(jc) - S(jc, "x1*U_x1_x2 + x2*U_x2_x2 + U_x2"));
  // n = 2 has nothing to check
  CHECK(check_compatibility_conditions(sf).compatible);
  CHECK(check_compatibility_conditions(sf).identities_checked == 0);
}

TEST_CASE("solved form: homogeneous and constant coefficient systems") {
  for (std::size_t n = 2; n <= 3; ++n) {
    Chart c = numbered_chart("x", n);
    std::vector<Rational> pt(n, Rational(1, 2));
    SolvedForm sf = reduce_to_solved_form(canonical_x(n), KForm(c, 2), pt);
    std::vector<ScalarField> zero_jets;
    for (std::size_t v = 0; v < sf.jets.chart.size(); ++v)
      zero_jets.push_back(v < n ? ScalarField::variable(sf.jets.chart, v) : ScalarField::zero(sf.jets.chart));
    for (auto& row : sf.h)
      for (auto& h : row) CHECK(h.substitute(zero_jets).is_zero());
  }
  Chart c = numbered_chart("x", 3);
  OperatorField A = op(c, {{"2", "1", "0"}, {"-1", "0", "1"}, {"5", "0", "0"}});
  KForm omega = two_form(c, {{0, 1, "3"}, {0, 2, "-1"}, {1, 2, "1/2"}});
  SolvedForm sf = reduce_to_solved_form(A, omega, std::vector<Rational>(3, Rational(0)));
  for (auto& row : sf.h)
    for (auto& h : row) {
      CHECK(h.is_polynomial());
      CHECK(h.num().total_degree() <= 1);
      for (std::size_t v = 0; v < 3; ++v) CHECK_FALSE(h.depends_on(v));
    }
}

TEST_CASE("reduction refuses non-companion points") {
  Chart c = chart({"y1", "y2"});
  OperatorField A = op(c, {{"y1", "0"}, {"0", "y2"}});
  CHECK(code_of([&] { reduce_to_solved_form(A, KForm(c, 2), std::vector<Rational>{Rational(1), Rational(2)}); }) ==
        ErrorCode::NotCompanionAtPoint);
  // A companion operator whose row structure makes the elimination singular
  Chart c3 = numbered_chart("x", 3);
  OperatorField B = op(c3, {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  const ErrorCode e = code_of([&] { reduce_to_solved_form(B, KForm(c3, 2), std::vector<Rational>(3, Rational(0))); });
  if (e != ErrorCode::Internal) CHECK(e == ErrorCode::SingularReduction);
}

TEST_CASE("compatibility holds for admissible data and breaks under perturbation") {
  RandomSource rng(seed_from_env(83));
  for (int it = 0; it < 4; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    Chart c = numbered_chart("x", n);
    const OperatorField A = canonical_x(n);
    const KForm omega = cohomological_lhs(A, rng.polynomial(c, 3, 4));
    SolvedForm sf = reduce_to_solved_form(A, omega, std::vector<Rational>(n, Rational(0)));
    CompatibilityCertificate cert = check_compatibility_conditions(sf);
    CHECK(cert.compatible);
    CHECK(cert.violations.empty());
    CHECK(check_compatibility_conditions(sf.to_first_order()).compatible);
    if (n == 3) {
      CHECK(cert.identities_checked == 4);
      SolvedForm bad = sf;
      const ScalarField x1 = ScalarField::variable(sf.jets.chart, 0);
      bad.h[0][1] += x1;
      bad.h[1][0] += x1;
      CompatibilityCertificate b = check_compatibility_conditions(bad);
      CHECK_FALSE(b.compatible);
      REQUIRE_FALSE(b.violations.empty());
      CHECK(b.violations[0].find("D_x") != std::string::npos);
      CHECK_FALSE(check_compatibility_conditions(bad.to_first_order()).compatible);
    }
  }
}

TEST_CASE("first-order toy systems") {
  Chart c = chart({"x", "y", "z"});
  JetSpace J = make_jet_space(c, {"f"});
  CHECK(J.chart.names() == std::vector<std::string>{"x", "y", "z", "f", "f_z", "f_z_z"});
  // f_x = f_z, f_y = f: D_x f = f_z and D_y f_z = D_z f = f_z
  FirstOrderSystem good{J, {{S(J.chart, "f_z")}, {S(J.chart, "f")}}};
  CHECK(total_derivative(good, S(J.chart, "f"), 0) == S(J.chart, "f_z"));
  CHECK(total_derivative(good, S(J.chart, "f_z"), 1) == S(J.chart, "f_z"));
  CHECK(total_derivative(good, S(J.chart, "f_z"), 2) == S(J.chart, "f_z_z"));
  CHECK(check_compatibility_conditions(good).compatible);
  // f_y = x f: D_x(x f) - D_y f_z = f + x f_z - x f_z = f
  FirstOrderSystem bad{J, {{S(J.chart, "f_z")}, {S(J.chart, "x*f")}}};
  CompatibilityCertificate cert = check_compatibility_conditions(bad);
  CHECK_FALSE(cert.compatible);
  REQUIRE(cert.violations.size() == 1);
  CHECK(cert.violations[0].find("z-free part f") != std::string::npos);
  // z-coefficient: f_y = x f_z
  FirstOrderSystem zbad{J, {{S(J.chart, "0")}, {S(J.chart, "x*f_z")}}};
  cert = check_compatibility_conditions(zbad);
  CHECK_FALSE(cert.compatible);
  CHECK(cert.violations[0].find("z-free part f_z") != std::string::npos);
  // z coefficients come from the commutator of dH_x/dg and dH_y/dg, so they
  // need two unknowns: f_x = h_z, h_y = f_z gives D_x 0 - D_y h_z = -f_z_z
  JetSpace J2 = make_jet_space(c, {"f", "h"});
  const Chart& j2 = J2.chart;
  FirstOrderSystem zonly{J2, {{S(j2, "h_z"), S(j2, "0")}, {S(j2, "0"), S(j2, "f_z")}}};
  cert = check_compatibility_conditions(zonly);
  CHECK_FALSE(cert.compatible);
  REQUIRE(cert.violations.size() == 2);
  CHECK(cert.violations[0].find("coefficient of f_z_z -1") != std::string::npos);
  CHECK(cert.violations[0].find("z-free") == std::string::npos);
}

TEST_CASE("series solve: trivial system keeps its initial data") {
  Chart c = chart({"x", "y", "z"});
  JetSpace J = make_jet_space(c, {"f"});
  FirstOrderSystem sys{J, {{ScalarField::zero(J.chart)}, {ScalarField::zero(J.chart)}}};
  std::vector<Rational> base(3, Rational(0));
  TruncatedSeries v = series_from_scalar(S(c, "1 + z + z^2/2"), base, 8);
  auto f = cauchy_series_solve(sys, base, {v}, 8);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == v);
  // the good toy system: f = exp-like series, checked against its own equations
  FirstOrderSystem good{J, {{S(J.chart, "f_z")}, {S(J.chart, "f")}}};
  auto g1 = cauchy_series_solve(good, base, {v}, 6);
  auto g2 = cauchy_series_solve(good, base, {v}, 6, {0, 1});
  CHECK(g1 == g2);
  CHECK((g1[0].partial(0) - g1[0].partial(2)).with_order(5).is_zero());
  CHECK((g1[0].partial(1) - g1[0].with_order(5)).is_zero());
  FirstOrderSystem bad{J, {{S(J.chart, "f_z")}, {S(J.chart, "x*f")}}};
  CHECK(code_of([&] { cauchy_series_solve(bad, base, {v}, 6); }) == ErrorCode::IncompatibleSystem);
  TruncatedSeries off = series_from_scalar(S(c, "x + z"), base, 8);
  CHECK(code_of([&] { cauchy_series_solve(sys, base, {off}, 6); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("series solve of the symmetric-function form of the diagonal example") {
  // x1 = -(y1 + y2), x2 = y1 y2 turns diag(y1, y2) into the companion block
  // and (y2 - y1) dy1^dy2 into dx1^dx2; the diagonal solution y1 y2 is x2.
  Chart yc = chart({"y1", "y2"});
  Chart xc = numbered_chart("x", 2);
  std::vector<ScalarField> fwd{S(yc, "-(y1 + y2)"), S(yc, "y1*y2")};
  ScalarMatrix K = jacobian(fwd);
  ScalarMatrix D = ScalarMatrix::parse(yc, {{"y1", "0"}, {"0", "y2"}});
  CHECK(K * D * K.inverse() == canonical_A(xc, 2).substitute(fwd));
  CHECK(K.determinant() == S(yc, "y2 - y1"));
  DiagonalProblem p{{S(yc, "y1"), S(yc, "y2")}, two_form(yc, {{0, 1, "y2 - y1"}})};
  CHECK(solve_diagonal(p) == S(yc, "y1*y2"));

  const OperatorField A = canonical_x(2);
  KForm omega = two_form(xc, {{0, 1, "1"}});
  const std::vector<Rational> pt{Rational(1), Rational(-2)};
  SolvedForm sf = reduce_to_solved_form(A, omega, pt);
  const unsigned N = kDefaultOrder;
  TruncatedSeries U = cauchy_series_solve(sf, zero_initial(sf, N), N);
  CHECK(U.order() == N);
  // U - x2 is homogeneous: d(A* d(U - x2)) vanishes below order N - 1
  KForm res = cohomological_lhs(A, U.to_scalar() - S(xc, "x2"));
  for (const auto& [idx, comp] : res.comps())
    CHECK(series_from_scalar(comp, pt, N - 2).is_zero());
  // matched data reproduces x2 exactly; two runs agree
  TruncatedSeries Ux = cauchy_series_solve(sf, initial_from(sf, S(xc, "x2"), N), N);
  CHECK(Ux.to_scalar() == S(xc, "x2"));
  CHECK(cauchy_series_solve(sf, initial_from(sf, S(xc, "x2"), N), N) == Ux);
}

TEST_CASE("series solve: order independence and residuals for n = 3") {
  RandomSource rng(seed_from_env(97));
  Chart c = numbered_chart("x", 3);
  const OperatorField A = canonical_x(3);
  const KForm omega = cohomological_lhs(A, rng.polynomial(c, 3, 4));
  const std::vector<Rational> pt{Rational(0), Rational(1), Rational(-1)};
  SolvedForm sf = reduce_to_solved_form(A, omega, pt);
  const unsigned N = 6;
  TruncatedSeries Ud = cauchy_series_solve(sf, zero_initial(sf, N), N);
  TruncatedSeries Uo = cauchy_series_solve(sf, zero_initial(sf, N), N, {0, 1});
  CHECK(Ud == Uo);
  KForm res = cohomological_lhs(A, Ud.to_scalar()) - omega;
  for (const auto& [idx, comp] : res.comps()) CHECK(series_from_scalar(comp, pt, N - 2).is_zero());
}

TEST_CASE("canonicalization of the canonical pair is trivial") {
  CanonicalPN c = build_canonical(2);
  auto r = solve_canonicalization(c.pair, std::vector<Rational>(2, Rational(0)), kDefaultOrder);
  CHECK(r.T.is_zero());
  CHECK(r.U.is_zero());
  CHECK_FALSE(r.residual_degree.has_value());
}

TEST_CASE("canonicalization round trip") {
  RandomSource rng(seed_from_env(113));
  for (std::size_t n = 2; n <= 3; ++n) {
    CanonicalPN c = build_canonical(n);
    const Chart& ch = c.pair.chart();
    const ScalarField Ustar = n == 2 ? S(ch, "x1^2*x2") : rng.polynomial_in(ch, first(n), 3, 5);
    const PNPair moved = generating_transform(Ustar, c.pair);
    std::vector<Rational> pt(2 * n, Rational(0));
    auto r = solve_canonicalization(moved, pt, kDefaultOrder, -Ustar);
    if (n == 2) CHECK_FALSE(r.T.is_zero());
    CHECK_FALSE(r.residual_degree.has_value());
    CHECK(r.transformed.L == c.pair.L);
    CHECK(r.U.to_scalar().rechart(ch) == -Ustar);
    // zero data: S~ - S starts at degree N - 1 or later
    auto z = solve_canonicalization(moved, pt, kDefaultOrder);
    if (z.residual_degree) CHECK(*z.residual_degree + 1 >= kDefaultOrder);
  }
}

TEST_CASE("canonicalization stages report failures") {
  CanonicalPN c = build_canonical(3);
  const Chart& ch = c.pair.chart();
  auto with = [&](const char* t12, const char* t13, const char* t23) {
    ScalarMatrix L = c.pair.L.matrix();
    ScalarMatrix Sh = c.S;
    Sh(0, 1) += S(ch, t12), Sh(1, 0) -= S(ch, t12);
    Sh(0, 2) += S(ch, t13), Sh(2, 0) -= S(ch, t13);
    Sh(1, 2) += S(ch, t23), Sh(2, 1) -= S(ch, t23);
    L.set_block(3, 0, Sh);
    return PNPair{c.pair.omega, OperatorField(L)};
  };
  std::vector<Rational> pt(6, Rational(0));
  CHECK(stage_of([&] { solve_canonicalization(with("x3", "0", "0"), pt, 6); }) == "T-closedness");
  CHECK(stage_of([&] { solve_canonicalization(with("p1", "0", "0"), pt, 6); }) == "extract-T");
  PNPair odd = c.pair;
  ScalarMatrix L = odd.L.matrix();
  L(0, 1) = S(ch, "2");
  odd.L = OperatorField(L);
  CHECK(stage_of([&] { solve_canonicalization(odd, pt, 6); }) == "block-structure");
}
