#pragma once

#include <vector>

#include "nijkit/pncompat.hpp"

namespace nijkit {

/// Base chart followed by momenta. A base name made of one letter and
/// digits (x1, y2) gets the momentum p1, p2; any other name gets "p_" + name.
/// Throws InvalidArgument on a clash with an existing name.
Chart cotangent_chart(const Chart& base);

struct TurielExtension {
  std::size_t n = 0;
  OperatorField A;      // on the base chart
  OperatorField L_ext;  // on the cotangent chart
  ScalarMatrix S;       // on the cotangent chart, linear in the momenta
  /// True when A was Nijenhuis, in which case L_ext was certified Nijenhuis
  /// and compatible with sum dx_i ^ dp_i.
  bool certified = false;
};

/// S_ij = sum_a p_a (d_j A^a_i - d_i A^a_j), L_ext = [[A, 0], [S, A^T]].
TurielExtension turiel_extend(const OperatorField& A);

/// sum over m_1 + 2 m_2 + ... + k m_k = k of prod y_i^{m_i} / m_i!, using
/// the first k coordinates of `chart`.
ScalarField newton_girard_sigma(std::size_t k, const Chart& chart);
/// Same on the chart (y1..yk).
ScalarField newton_girard_sigma(std::size_t k);

struct CompanionConversion {
  Chart x_chart, y_chart;
  std::vector<ScalarField> forward;  // y_k(x) = -tr(A^k)/k on x_chart
  std::vector<ScalarField> inverse;  // x_k = sigma_k(y) on y_chart
  OperatorField A_first;             // first companion form, sigma_i = x_i
  OperatorField A_second;            // A in the y coordinates
};

/// Builds and certifies the x -> y change: two-sided exact inverse, and A in
/// y coordinates equal to the second companion form with sigma_k(y).
CompanionConversion first_to_second_companion(std::size_t n);

/// Lifts a base change to the cotangent chart (momenta by the inverse
/// transpose Jacobian) and transports the pair. base_forward/base_inverse
/// are as in change_coordinates, on the base charts.
PNPair cotangent_transport(const PNPair& p, std::span<const ScalarField> base_forward,
                           std::span<const ScalarField> base_inverse);

/// omega = sum dy_i ^ dp_i and L = blockdiag(A, A^T), A the second
/// companion form with Newton-Girard coefficients; certified.
PNPair build_alternative_canonical(std::size_t n);

/// sigma_{n-j+1} = -d Phi / dy_j, so that the last row of the second
/// companion operator is d Phi.
std::vector<ScalarField> sigma_from_potential(const ScalarField& phi);

}  // namespace nijkit
