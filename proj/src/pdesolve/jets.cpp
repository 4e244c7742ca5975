#include "nijkit/error.hpp"
#include "nijkit/pdesolve.hpp"

namespace nijkit {

JetSpace make_jet_space(const Chart& base, const std::vector<std::string>& unknowns) {
  if (base.empty()) throw Error(ErrorCode::InvalidArgument, "jet space over an empty chart");
  const std::string& xn = base.name(base.size() - 1);
  std::vector<std::string> extra;
  for (const auto& u : unknowns) extra.push_back(u);
  for (const auto& u : unknowns) extra.push_back(u + "_" + xn);
  for (const auto& u : unknowns) extra.push_back(u + "_" + xn + "_" + xn);
  if (base.size() + extra.size() > kMaxVars)
    throw Error(ErrorCode::DegreeOverflow, "jet chart would need " + std::to_string(base.size() + extra.size()) +
                                               " variables (limit " + std::to_string(kMaxVars) + ")");
  JetSpace j;
  j.base = base;
  j.chart = base.extended(extra);  // rejects duplicate names
  j.unknowns = unknowns;
  return j;
}

namespace {

ScalarField last_derivative(const JetSpace& J, const ScalarField& e) {
  const std::size_t n = J.n();
  ScalarField r = e.partial(J.x(n - 1));
  for (std::size_t s = 0; s < J.r(); ++s) {
    if (e.depends_on(J.z(s)))
      throw Error(ErrorCode::InvalidArgument, "total derivative of an expression already containing " +
                                                  J.chart.name(J.z(s)));
    if (e.depends_on(J.f(s))) r += ScalarField::variable(J.chart, J.g(s)) * e.partial(J.f(s));
    if (e.depends_on(J.g(s))) r += ScalarField::variable(J.chart, J.z(s)) * e.partial(J.g(s));
  }
  return r;
}

// Splits a jet expression into its z-free part and z coefficients (it is
// affine in z after one total derivative).
std::string describe_residual(const JetSpace& J, const ScalarField& r) {
  std::vector<ScalarField> zero_z;
  for (std::size_t v = 0; v < J.chart.size(); ++v) zero_z.push_back(ScalarField::variable(J.chart, v));
  std::string out;
  for (std::size_t s = 0; s < J.r(); ++s) zero_z[J.z(s)] = ScalarField::zero(J.chart);
  ScalarField free = r.substitute(zero_z);
  if (!free.is_zero()) out += "z-free part " + to_string(free);
  for (std::size_t s = 0; s < J.r(); ++s) {
    ScalarField cz = r.partial(J.z(s));
    if (cz.is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += "coefficient of " + J.chart.name(J.z(s)) + " " + to_string(cz);
  }
  return out;
}

}  // namespace

ScalarField total_derivative(const FirstOrderSystem& sys, const ScalarField& e, std::size_t i) {
  const JetSpace& J = sys.jets;
  require_same_chart(e.chart(), J.chart, "jet expression");
  const std::size_t n = J.n();
  if (i >= n) throw Error(ErrorCode::InvalidArgument, "total derivative index out of range");
  if (i == n - 1) return last_derivative(J, e);
  ScalarField r = e.partial(J.x(i));
  for (std::size_t s = 0; s < J.r(); ++s) {
    if (e.depends_on(J.z(s)))
      throw Error(ErrorCode::InvalidArgument, "total derivative of an expression already containing " +
                                                  J.chart.name(J.z(s)));
    if (e.depends_on(J.f(s))) r += sys.H[i][s] * e.partial(J.f(s));
    if (e.depends_on(J.g(s))) r += last_derivative(J, sys.H[i][s]) * e.partial(J.g(s));
  }
  return r;
}

CompatibilityCertificate check_compatibility_conditions(const FirstOrderSystem& sys) {
  const JetSpace& J = sys.jets;
  const std::size_t n = J.n();
  if (sys.H.size() + 1 != n) throw Error(ErrorCode::ShapeMismatch, "need equations for x_1..x_{n-1}");
  for (const auto& row : sys.H) {
    if (row.size() != J.r()) throw Error(ErrorCode::ShapeMismatch, "one right-hand side per unknown");
    for (const auto& h : row) {
      require_same_chart(h.chart(), J.chart, "right-hand side");
      for (std::size_t s = 0; s < J.r(); ++s)
        if (h.depends_on(J.z(s))) throw Error(ErrorCode::InvalidArgument, "right-hand sides may not contain z");
    }
  }
  CompatibilityCertificate cert;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      for (std::size_t s = 0; s < J.r(); ++s) {
        ++cert.identities_checked;
        ScalarField r = total_derivative(sys, sys.H[j][s], i) - total_derivative(sys, sys.H[i][s], j);
        if (r.is_zero()) continue;
        cert.compatible = false;
        cert.violations.push_back("D_" + J.base.name(i) + " H[" + J.base.name(j) + "," + J.unknowns[s] + "] - D_" +
                                  J.base.name(j) + " H[" + J.base.name(i) + "," + J.unknowns[s] +
                                  "]: " + describe_residual(J, r));
      }
  return cert;
}

FirstOrderSystem SolvedForm::to_first_order() const {
  const std::size_t n = jets.n();
  FirstOrderSystem sys{jets, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<ScalarField> row;
    for (std::size_t s = 0; s < n; ++s)
      row.push_back(s + 1 < n ? h[s][i] : ScalarField::variable(jets.chart, jets.g(i)));
    sys.H.push_back(std::move(row));
  }
  return sys;
}

CompatibilityCertificate check_compatibility_conditions(const SolvedForm& sf) {
  const FirstOrderSystem sys = sf.to_first_order();
  const JetSpace& J = sf.jets;
  const std::size_t m = J.n() - 1;
  CompatibilityCertificate cert;
  auto name = [&](std::size_t a, std::size_t b, std::size_t k) {
    return "D_" + J.base.name(k) + " h_" + std::to_string(a + 1) + std::to_string(b + 1);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        if (i == k) continue;  // all three equal
        // D_k h_ij = D_i h_jk = D_j h_ki
        const ScalarField a = total_derivative(sys, sf.h[i][j], k);
        const ScalarField b = total_derivative(sys, sf.h[j][k], i);
        const ScalarField c = total_derivative(sys, sf.h[k][i], j);
        const std::pair<const ScalarField*, std::string> vals[3] = {
            {&a, name(i, j, k)}, {&b, name(j, k, i)}, {&c, name(k, i, j)}};
        for (int t = 0; t < 2; ++t) {
          ++cert.identities_checked;
          ScalarField r = *vals[t].first - *vals[t + 1].first;
          if (r.is_zero()) continue;
          cert.compatible = false;
          cert.violations.push_back(vals[t].second + " - " + vals[t + 1].second + ": " + describe_residual(J, r));
        }
      }
  return cert;
}

SolvedForm reduce_to_solved_form(const OperatorField& A, const KForm& omega, std::span<const Rational> point) {
  const Chart& c = A.chart();
  const std::size_t n = c.size();
  require_same_chart(omega.chart(), c, "Omega");
  if (omega.degree() != 2) throw Error(ErrorCode::InvalidArgument, "Omega must be a 2-form");
  if (A.dim() != n) throw Error(ErrorCode::ShapeMismatch, "operator size must match the chart");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "reduction needs at least two coordinates");
  if (point.size() != n) throw Error(ErrorCode::ShapeMismatch, "point has the wrong dimension");

  const ScalarMatrix A0 = A.matrix().evaluate(point);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const bool want_one = i + 1 == j;
      const Rational v = A0(i, j).constant_value();
      if (v != Rational(want_one ? 1 : 0))
        throw Error(ErrorCode::NotCompanionAtPoint, "A(point) entry (" + std::to_string(i + 1) + "," +
                                                        std::to_string(j + 1) + ") is " + rational_to_string(v));
    }

  std::vector<std::string> unknowns;
  for (std::size_t s = 0; s < n; ++s) unknowns.push_back("U_" + c.name(s));
  SolvedForm sf;
  sf.jets = make_jet_space(c, unknowns);
  sf.A = A;
  sf.omega = omega;
  sf.point.assign(point.begin(), point.end());
  const JetSpace& J = sf.jets;
  const Chart& jc = J.chart;

  // unknown second derivatives U_ab, a <= b < n-1
  std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n, 0));
  std::size_t m = 0;
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = a; b + 1 < n; ++b) slot[a][b] = slot[b][a] = m++;

  ScalarMatrix C(c, m, m);
  std::vector<ScalarField> rhs;
  std::size_t e = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = k + 1; j < n; ++j, ++e) {
      // sum_i (A^i_j U_ik - A^i_k U_ij) + sum_i (d_k A^i_j - d_j A^i_k) U_i = Omega_kj
      ScalarField r = omega.component({k, j}).rechart(jc);
      auto second = [&](std::size_t a, std::size_t b, const ScalarField& coef) {
        if (coef.is_zero()) return;
        if (a + 1 < n && b + 1 < n) {
          C(e, slot[a][b]) += coef;
        } else {
          const std::size_t s = a + 1 < n ? a : b;
          r -= coef.rechart(jc) * ScalarField::variable(jc, J.g(s));
        }
      };
      for (std::size_t i = 0; i < n; ++i) {
        second(i, k, A(i, j));
        second(i, j, -A(i, k));
        const ScalarField first = A(i, j).partial(k) - A(i, k).partial(j);
        if (!first.is_zero()) r -= first.rechart(jc) * ScalarField::variable(jc, J.f(i));
      }
      rhs.push_back(r);
    }

  const ScalarField det = C.determinant();
  if (det.is_zero())
    throw Error(ErrorCode::SingularReduction, "the second derivatives U_xixj (i, j < n) cannot be eliminated");
  if (det.evaluate(point) == Rational(0))
    throw Error(ErrorCode::SingularReduction, "the elimination determinant " + to_string(det) + " vanishes at the point");
  const ScalarMatrix Ci = C.inverse().rechart(jc);

  sf.h.assign(n - 1, std::vector<ScalarField>(n - 1, ScalarField::zero(jc)));
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = a; b + 1 < n; ++b) {
      ScalarField v = ScalarField::zero(jc);
      for (std::size_t q = 0; q < m; ++q) v += Ci(slot[a][b], q) * rhs[q];
      sf.h[a][b] = sf.h[b][a] = v;
    }
  return sf;
}

}  // namespace nijkit
