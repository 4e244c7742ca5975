#include "nijkit/error.hpp"
#include "nijkit/nijenhuis.hpp"

namespace nijkit {

TorsionTensor::TorsionTensor(Chart chart, std::size_t n)
    : chart_(chart), n_(n), c_(n * n * n, ScalarField::zero(chart)) {}

void TorsionTensor::set(std::size_t k, std::size_t i, std::size_t j, const ScalarField& v) {
  c_[(k * n_ + i) * n_ + j] = v;
  c_[(k * n_ + j) * n_ + i] = -v;
}

bool TorsionTensor::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<std::string> TorsionTensor::nonzero_components() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!(*this)(k, i, j).is_zero())
          out.push_back("N^" + chart_.name(k) + "_(" + chart_.name(i) + "," + chart_.name(j) + ") = " +
                        to_string((*this)(k, i, j)));
  return out;
}

TorsionTensor torsion(const OperatorField& L) {
  const std::size_t n = L.dim();
  const Chart& chart = L.chart();
  // dL[s][k][j] = d_s L^k_j
  std::vector<ScalarField> dL(n * n * n, ScalarField::zero(chart));
  auto at = [n](std::size_t s, std::size_t k, std::size_t j) { return (s * n + k) * n + j; };
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (L(k, j).depends_on(s)) dL[at(s, k, j)] = L(k, j).partial(s);

  TorsionTensor N(chart, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        ScalarField acc = ScalarField::zero(chart);
        for (std::size_t s = 0; s < n; ++s) {
          if (!L(s, i).is_zero() && !dL[at(s, k, j)].is_zero()) acc += L(s, i) * dL[at(s, k, j)];
          if (!L(s, j).is_zero() && !dL[at(s, k, i)].is_zero()) acc -= L(s, j) * dL[at(s, k, i)];
          if (!L(k, s).is_zero()) {
            ScalarField t = dL[at(j, s, i)] - dL[at(i, s, j)];
            if (!t.is_zero()) acc += L(k, s) * t;
          }
        }
        N.set(k, i, j, acc);
      }
  return N;
}

KForm contract(const KForm& alpha, const TorsionTensor& N) {
  if (alpha.degree() != 1) throw Error(ErrorCode::InvalidArgument, "contract needs a 1-form");
  require_same_chart(alpha.chart(), N.chart(), "contract");
  const std::size_t n = N.dim();
  KForm r(alpha.chart(), 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ScalarField acc = ScalarField::zero(alpha.chart());
      for (std::size_t k = 0; k < n; ++k) {
        const ScalarField& nk = N(k, i, j);
        if (nk.is_zero()) continue;
        ScalarField a = alpha.component({k});
        if (!a.is_zero()) acc += a * nk;
      }
      r.add({i, j}, acc);
    }
  return r;
}

KForm torsion_via_forms(const OperatorField& L, const KForm& alpha) {
  if (alpha.degree() != 1) throw Error(ErrorCode::InvalidArgument, "torsion_via_forms needs a 1-form");
  KForm la = pullback(L, alpha);
  KForm lla = pullback(L, la);
  return i_A(L, d(la)) - d(lla) - insert_both(L, d(alpha));
}

OperatorField first_companion(const std::vector<ScalarField>& sigma) {
  if (sigma.empty()) throw Error(ErrorCode::InvalidArgument, "companion form needs n >= 1");
  const Chart& chart = sigma[0].chart();
  const std::size_t n = sigma.size();
  ScalarMatrix m(chart, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_chart(sigma[i].chart(), chart, "companion coefficients");
    m(i, 0) = -sigma[i];
    if (i + 1 < n) m(i, i + 1) = ScalarField::one(chart);
  }
  return OperatorField(m);
}

OperatorField second_companion(const std::vector<ScalarField>& sigma) {
  if (sigma.empty()) throw Error(ErrorCode::InvalidArgument, "companion form needs n >= 1");
  const Chart& chart = sigma[0].chart();
  const std::size_t n = sigma.size();
  ScalarMatrix m(chart, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = ScalarField::one(chart);
  for (std::size_t j = 0; j < n; ++j) {
    require_same_chart(sigma[j].chart(), chart, "companion coefficients");
    m(n - 1, j) = -sigma[n - 1 - j];
  }
  return OperatorField(m);
}

SecondCompanionCheck check_second_companion_nijenhuis(const std::vector<ScalarField>& sigma) {
  OperatorField A = second_companion(sigma);
  const std::size_t n = sigma.size();
  const Chart& chart = A.chart();
  SecondCompanionCheck out;
  KForm dyn = KForm::coordinate_differential(chart, n - 1);
  KForm a1 = pullback(A, dyn);
  KForm a2 = pullback(A, a1);
  KForm c1 = d(a1), c2 = d(a2);
  out.sig1 = c1.is_zero();
  out.sig2 = c2.is_zero();
  for (const auto& [k, v] : c1.comps())
    out.violations.push_back("d(A* dy_n)[" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "] = " + to_string(v));
  for (const auto& [k, v] : c2.comps())
    out.violations.push_back("d(A*^2 dy_n)[" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "] = " + to_string(v));
  out.torsion_zero = torsion(A).is_zero();
  return out;
}

}  // namespace nijkit
