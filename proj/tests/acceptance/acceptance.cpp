// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nijkit/app.hpp"
#include "nijkit/error.hpp"
#include "nijkit/parser.hpp"
#include "nijkit/pdesolve.hpp"
#include "nijkit/random.hpp"
#include "nijkit/turiel.hpp"

using namespace nijkit;

namespace {

using Clock = std::chrono::steady_clock;

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

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = "first failure: " + what;
      ok = false;
    }
  }
};

// 1
Outcome canonical_certification(std::uint64_t) {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 5; ++n) {
    const CanonicalPN c = build_canonical(n);
    const CompatibilityReport rep = check_compatibility(c.pair);
    o.require(torsion(c.pair.L).is_zero(), "torsion, n = " + std::to_string(n));
    o.require(rep.skew && rep.violations.empty(), "skewness, n = " + std::to_string(n));
    o.require(rep.tilde_closed && d(KForm::from_matrix(twisted_matrix(c.pair.omega, c.pair.L))).is_zero(),
              "d(omega~), n = " + std::to_string(n));
  }
  const double s = seconds_since(t0);
  o.require(s < 10.0, "runtime " + fmt_seconds(s));
  if (o.ok) o.detail = "n = 1..5 in " + fmt_seconds(s);
  return o;
}

// 2
Outcome published_values(std::uint64_t) {
  Outcome o;
  static const char* const table[5] = {
      "y1",
      "y2 + 1/2*y1^2",
      "y3 + y1*y2 + 1/6*y1^3",
      "y4 + 1/24*y1^4 + 1/2*y2*y1^2 + y1*y3 + 1/2*y2^2",
      "y5 + 1/120*y1^5 + 1/6*y2*y1^3 + 1/2*y3*y1^2 + 1/2*y1*y2^2 + y1*y4 + y3*y2",
  };
  const Chart y = numbered("y", 5);
  for (std::size_t k = 1; k <= 5; ++k)
    o.require(newton_girard_sigma(k, y) == parse_scalar(table[k - 1], y), "sigma" + std::to_string(k));
  for (std::size_t n = 1; n <= 4; ++n) {
    // the coupling block typed from its pattern: -p_j along row 1, p_i down column 1
    const Chart c = cotangent_chart(numbered("x", n));
    ScalarMatrix want(c, n, n);
    for (std::size_t j = 1; j < n; ++j) {
      want(0, j) = -ScalarField::variable(c, n + j);
      want(j, 0) = ScalarField::variable(c, n + j);
    }
    const TurielExtension first = turiel_extend(first_companion(coordinates(numbered("x", n))));
    o.require(first.S == want, "S of the first companion form, n = " + std::to_string(n));
    std::vector<ScalarField> sigma;
    for (std::size_t k = 1; k <= n; ++k) sigma.push_back(newton_girard_sigma(k, numbered("y", n)));
    o.require(turiel_extend(second_companion(sigma)).S.is_zero(),
              "S of the second companion form, n = " + std::to_string(n));
  }
  if (o.ok) o.detail = "sigma1..sigma5 exact; S for both companion forms, n = 1..4";
  return o;
}

// 3
Outcome torsion_cross_oracle(std::uint64_t seed) {
  Outcome o;
  RandomSource rng(seed + 3);
  int nonzero = 0;
  const int count = 60;
  for (int it = 0; it < count; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    const Chart c = numbered("x", n);
    const OperatorField L = rng.operator_field(c, 2);
    const TorsionTensor N = torsion(L);
    if (!N.is_zero()) ++nonzero;
    for (std::size_t k = 0; k < n; ++k) {
      const KForm a = KForm::coordinate_differential(c, k);
      o.require(torsion_via_forms(L, a) == contract(a, N), "instance " + std::to_string(it));
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " operators, " + std::to_string(nonzero) + " with nonzero torsion";
  return o;
}

// 4
Outcome d_A_axioms(std::uint64_t seed) {
  Outcome o;
  RandomSource rng(seed + 4);
  int nijenhuis = 0;
  const int count = 60;
  for (int it = 0; it < count; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    const Chart c = numbered("x", n);
    OperatorField A;
    switch (it % 4) {
      case 0: A = rng.operator_field(c, 0); break;  // constant, hence Nijenhuis
      case 1: A = first_companion(coordinates(c)); break;
      default: A = rng.operator_field(c, 1); break;
    }
    const ScalarField f = rng.polynomial(c, 3, 4), g = rng.polynomial(c, 2, 3);
    KForm a(c, 1), b(c, 1);
    for (std::size_t i = 0; i < n; ++i) {
      a.add({i}, rng.polynomial(c, 2, 2));
      b.add({i}, rng.polynomial(c, 2, 2));
    }
    const KForm F = KForm::function(f), G = KForm::function(g);
    const std::string tag = "instance " + std::to_string(it);
    o.require(d_A(A, F) == pullback(A, d(F)), tag + ": d_A f = A* df");
    o.require(d_A(A, F + G) == d_A(A, F) + d_A(A, G) && d_A(A, a + b) == d_A(A, a) + d_A(A, b),
              tag + ": linearity");
    o.require(d_A(A, a * f) == wedge(d_A(A, F), a) + d_A(A, a) * f, tag + ": Leibniz on f a");
    o.require(d_A(A, d(F)) == -d(d_A(A, F)) && d_A(A, d(a)).degree() == 3 && d_A(A, d(a)) == -d(d_A(A, a)),
              tag + ": anticommutation with d");
    if (torsion(A).is_zero()) {
      ++nijenhuis;
      for (std::size_t i = 0; i < n; ++i) {
        const KForm xi = KForm::function(ScalarField::variable(c, i));
        o.require(d_A(A, d_A(A, xi)).is_zero(), tag + ": d_A^2 x" + std::to_string(i + 1));
      }
      o.require(d_A(A, d_A(A, F)).is_zero(), tag + ": d_A^2 f");
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " instances, " + std::to_string(nijenhuis) + " Nijenhuis";
  return o;
}

// 5
Outcome second_companion_criterion(std::uint64_t seed) {
  Outcome o;
  RandomSource rng(seed + 5);
  int positive = 0;
  const int count = 40;
  for (int it = 0; it < count; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    const ScalarField phi = rng.polynomial(numbered("y", n), it % 3 == 0 ? 1 : 3, 4);
    const auto r = check_second_companion_nijenhuis(sigma_from_potential(phi));
    o.require(r.torsion_zero == torsion(second_companion(sigma_from_potential(phi))).is_zero(),
              "instance " + std::to_string(it) + ": torsion recomputed");
    o.require(r.holds() == r.torsion_zero, "instance " + std::to_string(it) + ": equivalence");
    if (r.torsion_zero) ++positive;
  }
  if (o.ok)
    o.detail = std::to_string(count) + " potentials, " + std::to_string(positive) + " Nijenhuis, " +
               std::to_string(count - positive) + " not";
  return o;
}

// 6
Outcome diagonal_solve(std::uint64_t seed) {
  Outcome o;
  RandomSource rng(seed + 6);
  const int count = 24;
  for (int it = 0; it < count; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    const Chart y = numbered("y", n);
    DiagonalProblem p{coordinates(y), KForm(y, 2)};
    ScalarMatrix m(y, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = p.lambdas[i];
    const OperatorField A(m);
    p.omega = cohomological_lhs(A, rng.polynomial(y, 4, 5));
    const ScalarField U = solve_diagonal(p);
    o.require((cohomological_lhs(A, U) - p.omega).is_zero(), "instance " + std::to_string(it));
  }
  const app::Report r = app::run_preset("prop1-counterexample", seed);
  o.require(r.status == app::Status::Ok && r.data["details"]["reported"] == "EigenvalueCollision",
            "collision preset");
  if (o.ok) o.detail = std::to_string(count) + " instances exact; collision reported as EigenvalueCollision";
  return o;
}

OperatorField canonical_base(std::size_t n) { return first_companion(coordinates(numbered("x", n))); }

// 7
Outcome compatibility_checker(std::uint64_t seed) {
  Outcome o;
  RandomSource rng(seed + 7);
  int identities = 0, flips = 0;
  const int count = 10;
  for (int it = 0; it < count; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    const Chart c = numbered("x", n);
    const OperatorField A = canonical_base(n);
    const KForm T = cohomological_lhs(A, rng.polynomial(c, 3, 5));
    o.require(d(T).is_zero() && d(i_A(A, T)).is_zero(), "instance " + std::to_string(it) + ": admissible");
    const SolvedForm sf = reduce_to_solved_form(A, -T, std::vector<Rational>(n, Rational(0)));
    const CompatibilityCertificate cert = check_compatibility_conditions(sf);
    const CompatibilityCertificate first = check_compatibility_conditions(sf.to_first_order());
    o.require(cert.compatible && cert.violations.empty() && first.compatible,
              "instance " + std::to_string(it) + ": compatible");
    identities += static_cast<int>(cert.identities_checked);
    if (n == 3) {
      SolvedForm bad = sf;
      const ScalarField x1 = ScalarField::variable(sf.jets.chart, 0);
      bad.h[0][1] += x1;
      bad.h[1][0] += x1;
      const bool flipped =
          !check_compatibility_conditions(bad).compatible && !check_compatibility_conditions(bad.to_first_order()).compatible;
      o.require(flipped, "instance " + std::to_string(it) + ": perturbation flip");
      if (flipped) ++flips;
    }
  }
  if (o.ok)
    o.detail = std::to_string(count) + " systems, " + std::to_string(identities) + " identities reduced to zero, " +
               std::to_string(flips) + " perturbations flipped";
  return o;
}

// 8
Outcome round_trip(std::uint64_t seed) {
  Outcome o;
  RandomSource rng(seed + 8);
  double worst = 0;
  int instances = 0;
  for (int it = 0; it < 4; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(it % 2);
    const CanonicalPN c = build_canonical(n);
    const Chart& ch = c.pair.chart();
    std::vector<std::size_t> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(i);
    ScalarField Us = rng.polynomial_in(ch, xs, 3, 5);
    if (Us.is_zero()) Us = ScalarField::variable(ch, 0) * ScalarField::variable(ch, n - 1) * ScalarField::variable(ch, 0);
    const PNPair moved = generating_transform(Us, c.pair);
    const auto t0 = Clock::now();
    const auto r = solve_canonicalization(moved, std::vector<Rational>(2 * n, Rational(0)), 8, -Us);
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    const std::string tag = "n = " + std::to_string(n) + ", U* = " + to_string(Us);
    // S~ - S through total degree 7
    o.require(!r.residual_degree || *r.residual_degree >= 8, tag + ": residual from degree " +
              (r.residual_degree ? std::to_string(*r.residual_degree) : std::string("none")));
    o.require(generating_transform(r.U.to_scalar().rechart(ch), moved).L == c.pair.L, tag + ": returns to canonical");
    o.require(s < 60.0, tag + ": runtime " + fmt_seconds(s));
    ++instances;
  }
  if (o.ok) o.detail = std::to_string(instances) + " instances at N = 8, slowest " + fmt_seconds(worst);
  return o;
}

// 9
Outcome companion_conversion(std::uint64_t) {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::string tag = "n = " + std::to_string(n);
    const auto conv = first_to_second_companion(n);
    for (std::size_t k = 0; k < n; ++k) {
      o.require(conv.forward[k].substitute(conv.inverse) == ScalarField::variable(conv.y_chart, k), tag + ": y(x(y))");
      o.require(conv.inverse[k].substitute(conv.forward) == ScalarField::variable(conv.x_chart, k), tag + ": x(y(x))");
    }
    o.require(conv.A_second == second_companion(conv.inverse), tag + ": second companion form");
    const PNPair moved = cotangent_transport(build_canonical(n).pair, conv.forward, conv.inverse);
    const PNPair alt = build_alternative_canonical(n);
    o.require(moved.L == alt.L && moved.omega == alt.omega, tag + ": transported pair");
    o.require(check_second_companion_nijenhuis(conv.inverse).holds(), tag + ": second companion certificate");
    o.require(check_compatibility(alt).ok(), tag + ": alternative pair compatible");
  }
  if (o.ok) o.detail = "n = 1..4";
  return o;
}

// 10
Outcome trace_identity(std::uint64_t) {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const Chart x = numbered("x", n);
    const OperatorField A = canonical_base(n);
    const auto diffs = trace_power_differentials(A, n);
    for (std::size_t k = 2; k <= n; ++k) {
      const ScalarField ck(x, Rational(1, static_cast<long>(k)));
      const ScalarField ck1(x, Rational(1, static_cast<long>(k - 1)));
      o.require(diffs[k - 1] * ck == pullback(A, diffs[k - 2]) * ck1,
                "n = " + std::to_string(n) + ", k = " + std::to_string(k));
    }
    const CanonicalPN c = build_canonical(n);
    ScalarMatrix Lk = c.pair.L.matrix(), Ak = c.A;
    for (std::size_t k = 1; k <= 2 * n; ++k) {
      if (k > 1) {
        Lk = Lk * c.pair.L.matrix();
        Ak = Ak * c.A;
      }
      o.require(Lk.trace() == Ak.trace() * ScalarField(c.pair.chart(), Rational(2)),
                "tr L^" + std::to_string(k) + ", n = " + std::to_string(n));
    }
  }
  if (o.ok) o.detail = "n = 2..4";
  return o;
}

}  // namespace

int main() {
  const std::uint64_t seed = seed_from_env(20240229);
  struct Criterion {
    const char* name;
    std::function<Outcome(std::uint64_t)> run;
  };
  const std::vector<Criterion> criteria = {
      {"canonical pair certification", canonical_certification},
      {"published sigma table and companion extensions", published_values},
      {"torsion against its form version", torsion_cross_oracle},
      {"d_A axioms and d_A^2 = 0", d_A_axioms},
      {"second companion criterion", second_companion_criterion},
      {"diagonal solve", diagonal_solve},
      {"compatibility conditions", compatibility_checker},
      {"canonicalization round trip", round_trip},
      {"companion conversion and transport", companion_conversion},
      {"trace identities", trace_identity},
  };
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run(seed);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
