#include <algorithm>

#include "nijkit/error.hpp"
#include "nijkit/nijenhuis.hpp"

namespace nijkit {

UPoly char_poly(const ScalarMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const Chart& chart = m.chart();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<ScalarField> c(n + 1, ScalarField::zero(chart));
  c[n] = ScalarField::one(chart);
  ScalarMatrix mk(chart, n, n);
  ScalarMatrix id = ScalarMatrix::identity(chart, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = (m * mk).trace() * Rational(-1, static_cast<long>(k));
  }
  return UPoly(chart, std::move(c));
}

UPoly char_poly(const OperatorField& L) { return char_poly(L.matrix()); }

std::vector<KForm> trace_power_differentials(const OperatorField& L, std::size_t k_max) {
  if (k_max > L.dim()) throw Error(ErrorCode::InvalidArgument, "k_max exceeds the operator dimension");
  std::vector<KForm> out;
  ScalarMatrix power = L.matrix();
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) power = power * L.matrix();
    out.push_back(d(KForm::function(power.trace())));
  }
  return out;
}

std::size_t rank_at_point(const std::vector<KForm>& one_forms, std::span<const Rational> point) {
  if (one_forms.empty()) return 0;
  const std::size_t n = one_forms[0].chart().size();
  Chart empty;
  ScalarMatrix m(empty, one_forms.size(), n);
  for (std::size_t r = 0; r < one_forms.size(); ++r) {
    if (one_forms[r].degree() != 1) throw Error(ErrorCode::InvalidArgument, "rank_at_point needs 1-forms");
    for (const auto& [k, v] : one_forms[r].comps()) m(r, k[0]) = ScalarField(empty, v.evaluate(point));
  }
  return m.rank();
}

std::vector<UPoly> invariant_factors(const ScalarMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "invariant factors of a non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) throw Error(ErrorCode::InvalidArgument, "invariant factors need a constant matrix");
  const std::size_t n = m.rows();
  Chart empty;
  std::vector<std::vector<UPoly>> a(n, std::vector<UPoly>(n, UPoly(empty)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = -m(i, j).constant_value();
      if (i == j)
        a[i][j] = UPoly::from_rationals({v, 1});
      else
        a[i][j] = UPoly::from_rationals({v});
    }

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // smallest-degree nonzero pivot in the trailing block
      std::size_t pi = n, pj = n;
      int best = -1;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            pi = i;
            pj = j;
          }
      if (best < 0) break;
      std::swap(a[k], a[pi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][pj]);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        UPoly q = a[i][k].divmod(a[k][k]).first;
        for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - q * a[k][j];
        if (!a[i][k].is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        UPoly q = a[k][j].divmod(a[k][k]).first;
        for (std::size_t i = k; i < n; ++i) a[i][j] = a[i][j] - q * a[i][k];
        if (!a[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!a[i][j].divmod(a[k][k]).second.is_zero()) {
            for (std::size_t c = k; c < n; ++c) a[k][c] = a[k][c] + a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<UPoly> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) throw Error(ErrorCode::Internal, "t Id - m cannot be singular");
    UPoly f = a[k][k].monic();
    if (f.degree() > 0) out.push_back(f);
  }
  std::stable_sort(out.begin(), out.end(), [](const UPoly& x, const UPoly& y) { return x.degree() < y.degree(); });
  return out;
}

namespace {

ScalarMatrix poly_of_matrix(const UPoly& q, const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  ScalarMatrix acc(m.chart(), n, n);
  ScalarMatrix id = ScalarMatrix::identity(m.chart(), n);
  for (int i = q.degree(); i >= 0; --i)
    acc = acc * m + id * ScalarField(m.chart(), q.coeffs()[static_cast<std::size_t>(i)].constant_value());
  return acc;
}

}  // namespace

PointDiagnostics point_diagnostics(const OperatorField& L, std::span<const Rational> point) {
  if (point.size() != L.dim()) throw Error(ErrorCode::InvalidArgument, "point dimension does not match the chart");
  PointDiagnostics out;
  out.point.assign(point.begin(), point.end());
  ScalarMatrix m0 = L.matrix().evaluate(point);
  const std::size_t n = L.dim();

  out.char_poly_at_point = char_poly(m0);
  out.invariant_factors = invariant_factors(m0);
  out.gl_regular = out.invariant_factors.size() == 1 || n == 0;

  auto diffs = trace_power_differentials(L, n);
  out.trace_rank_full = rank_at_point(diffs, point);
  std::vector<KForm> half(diffs.begin(), diffs.begin() + static_cast<long>(n / 2));
  out.trace_rank_half = rank_at_point(half, point);
  out.diff_nondegenerate_half = n >= 2 && out.trace_rank_half == n / 2;
  out.kostant_agreement = out.trace_rank_full < n || out.gl_regular;

  auto parts = squarefree_decomposition(out.char_poly_at_point);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    SegreData s{parts[i], static_cast<unsigned>(i + 1), {}};
    ScalarMatrix q = poly_of_matrix(parts[i], m0);
    ScalarMatrix p = q;
    for (unsigned k = 1; k <= s.multiplicity; ++k) {
      if (k > 1) p = p * q;
      s.ranks.push_back(p.rank());
    }
    out.segre.push_back(std::move(s));
  }
  return out;
}

}  // namespace nijkit
