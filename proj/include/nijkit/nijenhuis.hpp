#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nijkit/forms.hpp"
#include "nijkit/upoly.hpp"

namespace nijkit {

/// N^k_ij with N^k_ij = -N^k_ji.
class TorsionTensor {
 public:
  TorsionTensor(Chart chart, std::size_t n);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return n_; }
  const ScalarField& operator()(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * n_ + i) * n_ + j]; }
  /// Sets N^k_ij and N^k_ji = -v.
  void set(std::size_t k, std::size_t i, std::size_t j, const ScalarField& v);
  bool is_zero() const;
  /// Human-readable "N^k_ij = ..." lines for the nonzero components, i < j.
  std::vector<std::string> nonzero_components() const;

 private:
  Chart chart_;
  std::size_t n_;
  std::vector<ScalarField> c_;
};

TorsionTensor torsion(const OperatorField& L);

/// The 2-form (xi, eta) -> alpha(N_L(xi, eta)).
KForm contract(const KForm& alpha, const TorsionTensor& N);

/// Torsion seen as a map from 1-forms to 2-forms:
///   d(L*a)(L., .) + d(L*a)(., L.) - d(L*^2 a) - da(L., L.)
/// which equals a(N_L(., .)).
KForm torsion_via_forms(const OperatorField& L, const KForm& alpha);

/// First companion form: -sigma_i down the first column, shifted identity.
OperatorField first_companion(const std::vector<ScalarField>& sigma);
/// Second companion form: shifted identity, last row (-sigma_n, ..., -sigma_1).
OperatorField second_companion(const std::vector<ScalarField>& sigma);

struct SecondCompanionCheck {
  bool sig1 = false;  // d(A* dy_n) = 0
  bool sig2 = false;  // d(A*^2 dy_n) = 0
  bool torsion_zero = false;
  std::vector<std::string> violations;
  bool holds() const { return sig1 && sig2; }
};

/// Decides the two closedness conditions for the second companion operator
/// built from sigma (all on one chart of dimension n = sigma.size()), and
/// computes the torsion independently for comparison.
SecondCompanionCheck check_second_companion_nijenhuis(const std::vector<ScalarField>& sigma);

/// det(t Id - L) by Faddeev-LeVerrier over the field of rational functions.
UPoly char_poly(const OperatorField& L);
UPoly char_poly(const ScalarMatrix& m);

/// d tr L^k for k = 1..k_max.
std::vector<KForm> trace_power_differentials(const OperatorField& L, std::size_t k_max);
/// Rank of the coefficient matrix of 1-forms at a rational point.
std::size_t rank_at_point(const std::vector<KForm>& one_forms, std::span<const Rational> point);

/// Invariant factors (monic, divisibility chain, product = det) of t Id - m
/// for a constant square matrix m; trivial factors 1 are omitted.
std::vector<UPoly> invariant_factors(const ScalarMatrix& m);

struct SegreData {
  UPoly factor;             // square-free factor of the characteristic polynomial
  unsigned multiplicity;    // its multiplicity in the characteristic polynomial
  std::vector<std::size_t> ranks;  // rank q(L)^k for k = 1..multiplicity
};

struct PointDiagnostics {
  std::vector<Rational> point;
  bool gl_regular = false;
  bool diff_nondegenerate_half = false;
  std::size_t trace_rank_half = 0;
  std::size_t trace_rank_full = 0;
  /// Full-rank trace differentials imply gl-regular; false means the
  /// observed data contradicts that implication.
  bool kostant_agreement = true;
  UPoly char_poly_at_point;
  std::vector<UPoly> invariant_factors;
  std::vector<SegreData> segre;
};

/// Throws EvaluationFailure if an entry's denominator vanishes at the point.
PointDiagnostics point_diagnostics(const OperatorField& L, std::span<const Rational> point);

}  // namespace nijkit
