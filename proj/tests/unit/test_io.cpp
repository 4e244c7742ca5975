#include <doctest.h>

#include "helpers.hpp"
#include "nijkit/app.hpp"
#include "nijkit/error.hpp"
#include "nijkit/random.hpp"

using namespace nijkit;
using namespace nijkit::io;
using testing_support::chart;
using testing_support::numbered_chart;
using testing_support::S;

TEST_CASE("scalar JSON round trip and the documented layout") {
  Chart c = chart({"x", "y"});
  ScalarField f = S(c, "(3/2*x^2*y - y + 1)/(x - 2)");
  json j = scalar_to_json(f);
  CHECK(j["chart"] == json({"x", "y"}));
  CHECK(j["num"][0][0] == "3/2");
  CHECK(j["num"][0][1] == json({2, 1}));
  CHECK(scalar_from_json(j, c) == f);
  CHECK(scalar_from_json(json("x*y"), c) == S(c, "x*y"));
  // a scalar on a sub-chart moves by name
  json sub = scalar_to_json(S(chart({"y"}), "y^2"));
  CHECK(scalar_from_json(sub, c) == S(c, "y^2"));
  CHECK_THROWS_AS(scalar_from_json(json({{"num", json::array({json::array({"1", json::array({1})})})}}), c), Error);
  RandomSource rng(5);
  for (int i = 0; i < 20; ++i) {
    ScalarField g = rng.polynomial(c, 3, 4) / (rng.polynomial(c, 2, 2) + ScalarField::one(c));
    CHECK(scalar_from_json(scalar_to_json(g), c) == g);
    CHECK(scalar_from_json(json(to_string(g)), c) == g);
  }
}

TEST_CASE("rationals, forms, pairs and series") {
  CHECK(rational_from_json(json("-3/6")) == Rational(-1, 2));
  CHECK(rational_from_json(json(7)) == Rational(7));
  CHECK(rational_to_json(Rational(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(rational_from_json(json(0.5)), Error);

  Chart c = numbered_chart("x", 3);
  json fj = {{"degree", 2}, {"comps", {{"1,2", "x3"}, {"3,2", "1"}}}};
  KForm w = form_from_json(fj, c);
  CHECK(w.component({0, 1}) == S(c, "x3"));
  CHECK(w.component({1, 2}) == S(c, "-1"));
  CHECK(form_from_json(form_to_json(w), c) == w);
  CHECK(form_to_json(w)["comps"].contains("2,3"));
  CHECK_THROWS_AS(form_from_json(json({{"degree", 2}, {"comps", {{"1,4", "1"}}}}), c), Error);
  CHECK_THROWS_AS(form_from_json(json({{"degree", 2}, {"comps", {{"1", "1"}}}}), c), Error);

  for (std::size_t n = 1; n <= 3; ++n) {
    PNPair p = build_canonical(n).pair;
    PNPair q = pair_from_json(pair_to_json(p));
    CHECK(q.L == p.L);
    CHECK(q.omega == p.omega);
  }

  std::vector<Rational> base{Rational(1), Rational(-1, 2), Rational(0)};
  TruncatedSeries s = series_from_scalar(S(c, "1/(1 - x1*x2) + x3^2"), base, 5);
  TruncatedSeries s2 = series_from_json(series_to_json(s));
  CHECK(s2 == s);
  CHECK(series_to_json(s)["base"] == json({"1/1", "-1/2", "0/1"}));
}

TEST_CASE("verbs classify their outcomes") {
  using app::Status;
  json bad = {{"chart", json::array({"x1", "x2"})}, {"operator", json::array({json::array({"x2", "0"}), json::array({"0", "x1"})})}};
  auto r = app::torsion(bad);
  CHECK(r.status == Status::CheckFailed);
  CHECK(r.data["nonzero"].size() == 2);
  CHECK(r.data["nonzero"][0].get<std::string>().find("N^x1_(x1,x2)") == 0);

  json good = {{"chart", json::array({"x1", "x2"})}, {"operator", json::array({json::array({"x1", "0"}), json::array({"0", "x2"})})}};
  CHECK(app::torsion(good).status == Status::Ok);
  CHECK(app::torsion(json{{"chart", json::array({"x1"})}, {"operator", json::array({json::array({"y"})})}}).status == Status::InputError);
  CHECK(app::torsion(json{{"operator", json::array({json::array({"1"})})}}).status == Status::InputError);

  auto c = app::canonical(3, true);
  CHECK(c.status == Status::Ok);
  CHECK(c.data["certification"]["nijenhuis"] == true);
  CHECK(app::canonical(0, false).status == Status::InputError);

  json diag = {{"chart", json::array({"y1", "y2"})}, {"lambdas", json::array({"y1", "y1"})},
               {"omega", {{"degree", 2}, {"comps", {{"1,2", "1"}}}}}};
  auto d = app::solve_diagonal(diag);
  CHECK(d.status == Status::CheckFailed);
  CHECK(d.data["error"]["code"] == "EigenvalueCollision");

  // a pipeline failure carries its stage
  CanonicalPN c3 = build_canonical(3);
  ScalarMatrix L = c3.pair.L.matrix();
  L(4, 0) += S(c3.pair.chart(), "x3");
  L(3, 1) -= S(c3.pair.chart(), "x3");
  json prob = {{"pair", pair_to_json(PNPair{c3.pair.omega, OperatorField(L)})}, {"point", json::array({"0", "0", "0"})}, {"order", 4}};
  auto sc = app::solve_canonical(prob);
  CHECK(sc.status == Status::CheckFailed);
  CHECK(sc.data["error"]["stage"] == "T-closedness");
}

TEST_CASE("presets pass and are deterministic") {
  for (const auto& p : app::preset_catalog()) {
    CAPTURE(p.name);
    auto a = app::run_preset(p.name, 7);
    auto b = app::run_preset(p.name, 7);
    CHECK(a.status == app::Status::Ok);
    CHECK(a.data.dump(2) == b.data.dump(2));
    CHECK(a.text == b.text);
  }
  CHECK(app::run_preset("no-such-preset", 1).status == app::Status::InputError);
  std::vector<std::string> names;
  for (const auto& p : app::preset_catalog()) names.push_back(p.name);
  for (const char* want : {"canonical-n1", "canonical-n4", "turiel-first-companion", "turiel-second-companion",
                           "paper-sigma-table", "diagonal-solve", "prop1-counterexample", "theorem2-round-trip",
                           "lemma-b1", "trace-identity"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
}
