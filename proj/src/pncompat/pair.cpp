#include "nijkit/error.hpp"
#include "nijkit/pncompat.hpp"

namespace nijkit {

Chart canonical_chart(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (2 * n > kMaxVars) throw Error(ErrorCode::InvalidArgument, "n is too large for the chart capacity");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  return Chart(names);
}

KForm canonical_omega(const Chart& chart) {
  if (chart.size() % 2) throw Error(ErrorCode::ShapeMismatch, "canonical form needs an even-dimensional chart");
  const std::size_t n = chart.size() / 2;
  KForm w(chart, 2);
  for (std::size_t i = 0; i < n; ++i) w.add({i, n + i}, ScalarField::one(chart));
  return w;
}

ScalarMatrix canonical_A(const Chart& chart, std::size_t n) {
  ScalarMatrix a(chart, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, 0) = -ScalarField::variable(chart, i);
    if (i + 1 < n) a(i, i + 1) = ScalarField::one(chart);
  }
  return a;
}

ScalarMatrix canonical_S(const Chart& chart, std::size_t n) {
  ScalarMatrix s(chart, n, n);
  for (std::size_t j = 1; j < n; ++j) {
    ScalarField p = ScalarField::variable(chart, n + j);
    s(0, j) = -p;
    s(j, 0) = p;
  }
  return s;
}

ScalarMatrix twisted_matrix(const KForm& omega, const OperatorField& L) {
  require_same_chart(omega.chart(), L.chart(), "omega(L., .)");
  return L.matrix().transpose() * omega.matrix();
}

OperatorField recursion_operator(const KForm& omega, const KForm& omega_tilde) {
  require_same_chart(omega.chart(), omega_tilde.chart(), "recursion operator");
  ScalarMatrix w = omega.matrix();
  if (w.determinant().is_zero()) throw Error(ErrorCode::DegenerateOmega, "omega is degenerate");
  // M = L^T W with W, M skew gives L = W^-1 M
  return OperatorField(w.inverse() * omega_tilde.matrix());
}

CompatibilityReport check_compatibility(const PNPair& p) {
  CompatibilityReport r;
  require_same_chart(p.omega.chart(), p.L.chart(), "compatibility check");
  ScalarMatrix w = p.omega.matrix();
  r.omega_nondegenerate = !w.determinant().is_zero();
  if (!r.omega_nondegenerate) r.violations.push_back("det(omega) = 0");
  auto nm = [&](std::size_t i) { return p.chart().name(i); };
  KForm dw = d(p.omega);
  r.omega_closed = dw.is_zero();
  for (const auto& [k, v] : dw.comps())
    r.violations.push_back("d(omega)(" + nm(k[0]) + "," + nm(k[1]) + "," + nm(k[2]) + ") = " + to_string(v));
  ScalarMatrix m = twisted_matrix(p.omega, p.L);
  r.skew = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      ScalarField s = m(i, j) + m(j, i);
      if (!s.is_zero()) {
        r.skew = false;
        r.violations.push_back("omega(L d/d" + nm(i) + ", d/d" + nm(j) + ") + omega(L d/d" + nm(j) + ", d/d" + nm(i) +
                               ") = " + to_string(s));
      }
    }
  if (r.skew) {
    KForm dt = d(KForm::from_matrix(m));
    r.tilde_closed = dt.is_zero();
    for (const auto& [k, v] : dt.comps())
      r.violations.push_back("d(omega~)(" + nm(k[0]) + "," + nm(k[1]) + "," + nm(k[2]) + ") = " + to_string(v));
  }
  return r;
}

CanonicalPN build_canonical(std::size_t n) {
  Chart chart = canonical_chart(n);
  CanonicalPN out;
  out.n = n;
  out.A = canonical_A(chart, n);
  out.S = canonical_S(chart, n);
  ScalarMatrix L(chart, 2 * n, 2 * n);
  L.set_block(0, 0, out.A);
  L.set_block(n, 0, out.S);
  L.set_block(n, n, out.A.transpose());
  out.pair = PNPair{canonical_omega(chart), OperatorField(L)};
  if (!torsion(out.pair.L).is_zero())
    throw Error(ErrorCode::Internal, "canonical operator failed its torsion certification", "build_canonical");
  auto rep = check_compatibility(out.pair);
  if (!rep.ok())
    throw Error(ErrorCode::Internal, "canonical pair failed its compatibility certification", "build_canonical");
  return out;
}

JacobiRowResult jacobi_row_structure(const OperatorField& L) {
  JacobiRowResult r;
  if (L.dim() % 2) {
    r.failure = "operator dimension is odd";
    return r;
  }
  const std::size_t n = L.dim() / 2;
  const Chart& chart = L.chart();
  ScalarMatrix A = canonical_A(chart, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const ScalarField expected = j < n ? A(i, j) : ScalarField::zero(chart);
      if (L(i, j) != expected) {
        r.failure = "row " + std::to_string(i) + ": entry " + std::to_string(j) + " is " + to_string(L(i, j)) +
                    ", expected " + to_string(expected);
        return r;
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (L(n + i, n + j) != A(j, i)) {
        r.failure = "row " + std::to_string(n + i) + ": entry " + std::to_string(n + j) + " is " +
                    to_string(L(n + i, n + j)) + ", expected " + to_string(A(j, i));
        return r;
      }
  ScalarMatrix sh = L.matrix().block(n, 0, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (sh(i, j) != -sh(j, i)) {
        r.failure = "row " + std::to_string(n + i) + ": lower-left block is not skew at column " + std::to_string(j);
        return r;
      }
  r.ok = true;
  r.S_hat = sh;
  return r;
}

PNPair generating_transform(const ScalarField& U, const PNPair& p) {
  const Chart& chart = p.chart();
  require_same_chart(U.chart(), chart, "generating function");
  if (chart.size() % 2) throw Error(ErrorCode::ShapeMismatch, "generating transform needs an even-dimensional chart");
  const std::size_t n = chart.size() / 2;
  for (std::size_t i = n; i < 2 * n; ++i)
    if (U.depends_on(i))
      throw Error(ErrorCode::InvalidArgument, "generating function depends on the momentum " + chart.name(i));
  std::vector<ScalarField> forward, inverse;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    ScalarField c = ScalarField::variable(chart, i);
    if (i < n) {
      forward.push_back(c);
      inverse.push_back(c);
    } else {
      ScalarField g = U.partial(i - n);
      forward.push_back(c + g);
      inverse.push_back(c - g);
    }
  }
  return PNPair{change_coordinates(p.omega, forward, inverse), change_coordinates(p.L, forward, inverse)};
}

}  // namespace nijkit
