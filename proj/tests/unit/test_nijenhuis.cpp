#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "nijkit/error.hpp"
#include "nijkit/nijenhuis.hpp"
#include "nijkit/random.hpp"

using namespace nijkit;
using testing_support::canonical_by_hand;
using testing_support::chart;
using testing_support::numbered_chart;
using testing_support::op;
using testing_support::S;

namespace {

// det(t Id - m) by the Leibniz permutation sum, t appended to the chart.
UPoly leibniz_char_poly(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  Chart ct = m.chart().extended({"t__"});
  ScalarField t = ScalarField::variable(ct, ct.size() - 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ScalarField det = ScalarField::zero(ct);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ScalarField prod = ScalarField::one(ct);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
      ScalarField e = -m(i, perm[i]).rechart(ct);
      if (i == perm[i]) e += t;
      prod *= e;
    }
    det += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // read off coefficients in t
  std::vector<ScalarField> coeffs;
  const std::size_t tv = ct.size() - 1;
  REQUIRE(det.is_polynomial());
  for (unsigned k = 0; k <= n; ++k) {
    Poly ck = det.num().coeff_in(tv, k);
    std::vector<std::size_t> idx(ct.size());
    std::iota(idx.begin(), idx.end(), 0);
    coeffs.push_back(ScalarField(ct, ck).rechart(m.chart()));
  }
  return UPoly(m.chart(), coeffs);
}

}  // namespace

TEST_CASE("torsion examples") {
  Chart c = chart({"x1", "x2", "x3"});
  OperatorField f_id = op(c, {{"x1*x2", "0", "0"}, {"0", "x1*x2", "0"}, {"0", "0", "x1*x2"}});
  CHECK(torsion(f_id).is_zero());
  for (std::size_t n = 1; n <= 4; ++n) {
    Chart x = numbered_chart("x", n);
    std::vector<ScalarField> sigma;
    for (std::size_t i = 0; i < n; ++i) sigma.push_back(ScalarField::variable(x, i));
    CHECK(torsion(first_companion(sigma)).is_zero());
  }
  Chart c2 = chart({"x1", "x2"});
  TorsionTensor N = torsion(op(c2, {{"x2", "0"}, {"0", "x1"}}));
  CHECK_FALSE(N.is_zero());
  // hand expansion: N^0_01 = -L^0_0 d_1 L^0_0... gives x2 - ... ; check antisymmetry and the listed components
  CHECK(N(0, 0, 1) == -N(0, 1, 0));
  CHECK(N.nonzero_components().size() >= 1);
}

TEST_CASE("torsion of diag(x2, x1) by hand") {
  // L = diag(l0, l1) with l0 = x2, l1 = x1. Coordinate formula:
  // N^0_01 = L^0_0 d0 L^0_1 - L^1_1 d1 L^0_0 - L^0_0 d0 L^0_1 + L^0_0 d1 L^0_0 = (x2 - x1) * 1
  // N^1_01 = L^0_0 d0 L^1_1 - L^1_1 d1 L^1_0 - L^1_1 d0 L^1_1 + L^1_1 d1 L^1_0 = (x2 - x1) * 1
  Chart c = chart({"x1", "x2"});
  TorsionTensor N = torsion(op(c, {{"x2", "0"}, {"0", "x1"}}));
  CHECK(N(0, 0, 1) == S(c, "x2 - x1"));
  CHECK(N(1, 0, 1) == S(c, "x2 - x1"));
}

TEST_CASE("torsion shift invariance and forms cross-check") {
  RandomSource rng(99);
  for (int it = 0; it < 12; ++it) {
    Chart c = numbered_chart("u", it % 2 ? 3 : 2);
    OperatorField L = rng.operator_field(c, 2);
    ScalarMatrix shifted = L.matrix() + ScalarMatrix::identity(c, c.size()) * ScalarField(c, Rational(rng.integer(-5, 5), 3));
    TorsionTensor N = torsion(L);
    TorsionTensor Ns = torsion(OperatorField(shifted));
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) CHECK(N(k, i, j) == Ns(k, i, j));
    for (std::size_t k = 0; k < c.size(); ++k) {
      KForm e = KForm::coordinate_differential(c, k);
      CHECK(torsion_via_forms(L, e) == contract(e, N));
    }
    CHECK(torsion_via_forms(L, KForm(c, 1)).is_zero());
  }
}

TEST_CASE("forms torsion vanishes for the canonical block") {
  OperatorField L = canonical_by_hand(2);
  CHECK(torsion(L).is_zero());
  CHECK(torsion_via_forms(L, KForm::coordinate_differential(L.chart(), 0)).is_zero());
  Chart c = chart({"x1", "x2"});
  OperatorField bad = op(c, {{"x2", "0"}, {"0", "x1"}});
  CHECK_FALSE(torsion_via_forms(bad, KForm::coordinate_differential(c, 0)).is_zero());
}

TEST_CASE("second companion checks") {
  Chart y = chart({"y1", "y2"});
  auto swapped = check_second_companion_nijenhuis({S(y, "y2"), S(y, "y1")});
  // last row (-y1, -y2): d of it is 0, so sig1 holds; the torsion decides the rest
  CHECK(swapped.sig1);
  CHECK(swapped.holds() == swapped.torsion_zero);
  auto constant = check_second_companion_nijenhuis({S(y, "3"), S(y, "-1/2")});
  CHECK(constant.holds());
  CHECK(constant.torsion_zero);
  auto ng = check_second_companion_nijenhuis({S(y, "y1"), S(y, "y2 + y1^2/2")});
  CHECK(ng.holds());
  CHECK(ng.torsion_zero);
  auto broken = check_second_companion_nijenhuis({S(y, "y1*y2"), S(y, "y2")});
  CHECK_FALSE(broken.holds());
  CHECK_FALSE(broken.violations.empty());
  CHECK(broken.torsion_zero == broken.holds());
}

TEST_CASE("characteristic polynomial against the Leibniz expansion") {
  OperatorField L = canonical_by_hand(2);
  UPoly chi = char_poly(L);
  CHECK(chi == leibniz_char_poly(L.matrix()));
  const Chart& c = L.chart();
  UPoly r(c, {S(c, "x2"), S(c, "x1"), ScalarField::one(c)});
  CHECK(chi == r * r);
  CHECK(poly_square_root(chi) == r);

  Chart s = chart({"s1", "s2", "s3"});
  UPoly comp = char_poly(first_companion({S(s, "s1"), S(s, "s2"), S(s, "s3")}));
  CHECK(comp == UPoly(s, {S(s, "s3"), S(s, "s2"), S(s, "s1"), ScalarField::one(s)}));

  RandomSource rng(12);
  for (int it = 0; it < 10; ++it) {
    Chart c3 = chart({"a", "b", "c"});
    OperatorField R = rng.operator_field(c3, 2);
    CHECK(char_poly(R) == leibniz_char_poly(R.matrix()));
  }
  Chart e;
  ScalarMatrix cid = ScalarMatrix::identity(e, 3) * ScalarField(e, Rational(2));
  UPoly lin = UPoly::from_rationals({-2, 1});
  CHECK(char_poly(cid) == lin * lin * lin);
}

TEST_CASE("squared characteristic polynomial of the canonical pair up to n = 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    OperatorField L = canonical_by_hand(n);
    const Chart& c = L.chart();
    std::vector<ScalarField> coeffs(n + 1, ScalarField::zero(c));
    coeffs[n] = ScalarField::one(c);
    for (std::size_t i = 1; i <= n; ++i) coeffs[n - i] = ScalarField::variable(c, i - 1);
    CHECK(poly_square_root(char_poly(L)) == UPoly(c, coeffs));
  }
}

TEST_CASE("trace differentials") {
  OperatorField L = canonical_by_hand(2);
  auto diffs = trace_power_differentials(L, 2);
  std::vector<Rational> origin(4, Rational(0));
  CHECK(rank_at_point(diffs, origin) == 2);
  Chart c = chart({"a", "b"});
  ScalarMatrix cid = ScalarMatrix::identity(c, 2) * ScalarField(c, Rational(7));
  auto flat = trace_power_differentials(OperatorField(cid), 2);
  CHECK(flat[0].is_zero());
  CHECK(flat[1].is_zero());
  std::vector<Rational> p{1, 2};
  CHECK(rank_at_point(flat, p) == 0);
}

TEST_CASE("trace identity for the companion block") {
  for (std::size_t n = 2; n <= 4; ++n) {
    Chart x = numbered_chart("x", n);
    std::vector<ScalarField> sigma;
    for (std::size_t i = 0; i < n; ++i) sigma.push_back(ScalarField::variable(x, i));
    OperatorField A = first_companion(sigma);
    auto diffs = trace_power_differentials(A, n);
    for (std::size_t k = 2; k <= n; ++k) {
      KForm lhs = diffs[k - 1] * ScalarField(x, Rational(1, static_cast<long>(k)));
      KForm rhs = pullback(A, diffs[k - 2]) * ScalarField(x, Rational(1, static_cast<long>(k - 1)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("invariant factors and diagnostics") {
  Chart e;
  auto jordan = ScalarMatrix::parse(e, {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  auto f = invariant_factors(jordan);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == UPoly::from_rationals({0, 0, 0, 1}));

  auto scalar = ScalarMatrix::parse(e, {{"5", "0"}, {"0", "5"}});
  auto g = invariant_factors(scalar);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == UPoly::from_rationals({-5, 1}));
  CHECK(g[1] == g[0]);

  OperatorField L = canonical_by_hand(2);
  std::vector<Rational> origin(4, Rational(0));
  auto diag = point_diagnostics(L, origin);
  CHECK_FALSE(diag.gl_regular);
  REQUIRE(diag.invariant_factors.size() == 2);
  UPoly t2 = UPoly::from_rationals({0, 0, 1});
  CHECK(diag.invariant_factors[0] == t2);
  CHECK(diag.invariant_factors[1] == t2);
  CHECK(diag.diff_nondegenerate_half);
  CHECK(diag.kostant_agreement);

  Chart x = chart({"x1", "x2"});
  OperatorField A = first_companion({S(x, "x1"), S(x, "x2")});
  std::vector<Rational> o2{0, 0};
  auto da = point_diagnostics(A, o2);
  CHECK(da.gl_regular);
  CHECK(da.trace_rank_full == 2);

  // product of invariant factors is the characteristic polynomial
  RandomSource rng(5);
  for (int it = 0; it < 10; ++it) {
    ScalarMatrix m(e, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (rng.integer(0, 2) == 0) m(i, j) = ScalarField(e, Rational(rng.integer(-2, 2)));
    auto inv = invariant_factors(m);
    UPoly prod = UPoly::from_rationals({1});
    for (std::size_t k = 0; k < inv.size(); ++k) {
      prod = prod * inv[k];
      if (k > 0) CHECK(inv[k].divmod(inv[k - 1]).second.is_zero());
    }
    CHECK(prod == char_poly(m));
  }
}
