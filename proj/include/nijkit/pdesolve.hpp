#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nijkit/pncompat.hpp"
#include "nijkit/series.hpp"

namespace nijkit {

inline constexpr unsigned kDefaultOrder = 8;

/// d(A* dU) as a 2-form.
KForm cohomological_lhs(const OperatorField& A, const ScalarField& U);

// ---- diagonal case ---------------------------------------------------------

struct DiagonalProblem {
  std::vector<ScalarField> lambdas;  // lambda_i(y_i), all on one chart y
  KForm omega;                       // closed 2-form on y
};

/// Checks the problem's invariants: lambda_i depends on y_i only, d omega = 0
/// and d(i_A omega) = 0. Throws EigenvalueCollision, PreconditionFailed or
/// NotClosed.
void validate(const DiagonalProblem& p);

/// A particular U0 with d(A* dU0) = omega for A = diag(lambdas), verified
/// exactly. Errors: EigenvalueCollision, ConsistencyViolation (names the
/// failing third-derivative identity), NonIntegrableMonomial.
ScalarField solve_diagonal(const DiagonalProblem& p);

/// U0 + sum_i u_i(y_i) with u_i univariate over Q; re-verified.
ScalarField add_homogeneous(const DiagonalProblem& p, const ScalarField& U0, const std::vector<UPoly>& u);

// ---- jet expressions -------------------------------------------------------

/// Jet chart: base coordinates, then for each unknown f_s the symbols f_s,
/// g_s = d_n f_s and z_s = d_n^2 f_s (n = last base coordinate). A
/// JetExpression is a ScalarField on this chart.
struct JetSpace {
  Chart base;
  Chart chart;
  std::vector<std::string> unknowns;

  std::size_t n() const { return base.size(); }
  std::size_t r() const { return unknowns.size(); }
  std::size_t x(std::size_t i) const { return i; }
  std::size_t f(std::size_t s) const { return n() + s; }
  std::size_t g(std::size_t s) const { return n() + r() + s; }
  std::size_t z(std::size_t s) const { return n() + 2 * r() + s; }
};

JetSpace make_jet_space(const Chart& base, const std::vector<std::string>& unknowns);

/// d_i f_s = H[i][s](x, f, g) for i = 0..n-2.
struct FirstOrderSystem {
  JetSpace jets;
  std::vector<std::vector<ScalarField>> H;
};

/// Total derivative D_i of a jet expression in x, f, g (i < n), with
/// d_i f_s = H[i][s] and d_i g_s = D_n H[i][s] for i < n-1, and
/// D_n = d_n + sum g_s d/df_s + sum z_s d/dg_s.
ScalarField total_derivative(const FirstOrderSystem& sys, const ScalarField& e, std::size_t i);

struct CompatibilityCertificate {
  bool compatible = true;
  std::size_t identities_checked = 0;
  std::vector<std::string> violations;  // "<identity>: z-free part ..., coefficient of z_s ..."
};

/// D_i H_j = D_j H_i for all i < j < n-1 (every unknown), including the
/// coefficients of the formal z variables.
CompatibilityCertificate check_compatibility_conditions(const FirstOrderSystem& sys);

/// U_ab = h_ab(x, U_x, U_x.x_n) for a, b < n-1, from d(A* dU) = Omega.
struct SolvedForm {
  JetSpace jets;  // unknowns U_x1..U_xn
  OperatorField A;
  KForm omega;
  std::vector<Rational> point;
  std::vector<std::vector<ScalarField>> h;  // symmetric, (n-1) x (n-1)

  /// d_i U_xs = h_si (s < n-1), d_i U_xn = g_i.
  FirstOrderSystem to_first_order() const;
};

/// Errors: NotCompanionAtPoint, SingularReduction, EvaluationFailure.
SolvedForm reduce_to_solved_form(const OperatorField& A, const KForm& omega, std::span<const Rational> point);

/// D_k h_ij symmetric in i, j, k.
CompatibilityCertificate check_compatibility_conditions(const SolvedForm& sys);

// ---- power series ----------------------------------------------------------

/// First-order Cauchy problem. `initial[s]` is f_s on the line x_k = base_k
/// (k < n-1): a series in t_{n-1} only. Variables are integrated in
/// `variable_order` (default n-2, ..., 0). Returns f valid through `order`;
/// every equation's residual is certified to vanish through order - 1.
/// Errors: IncompatibleSystem, InvalidArgument, ResidualFailure.
std::vector<TruncatedSeries> cauchy_series_solve(const FirstOrderSystem& sys, std::span<const Rational> base,
                                                 const std::vector<TruncatedSeries>& initial, unsigned order,
                                                 std::vector<std::size_t> variable_order = {});

struct SecondOrderInitial {
  TruncatedSeries v;                  // U on the line
  std::vector<TruncatedSeries> grad;  // U_xs on the line, s < n-1
};

/// Zero data at the system's point.
SecondOrderInitial zero_initial(const SolvedForm& sys, unsigned order);
/// Data read off an exact function.
SecondOrderInitial initial_from(const SolvedForm& sys, const ScalarField& U, unsigned order);

/// U through `order`, with d(A* dU) - Omega certified zero through order - 2.
TruncatedSeries cauchy_series_solve(const SolvedForm& sys, const SecondOrderInitial& initial, unsigned order,
                                    std::vector<std::size_t> variable_order = {});

// ---- canonicalization pipeline ---------------------------------------------

struct CanonicalizationResult {
  ScalarMatrix T;                     // S_hat - S, on the x chart
  SolvedForm system;
  CompatibilityCertificate compatibility;
  TruncatedSeries U;
  PNPair transformed;
  /// Lowest total degree of a nonzero entry of S~ - S around the point,
  /// nullopt when S~ = S exactly.
  std::optional<unsigned> residual_degree;
};

/// Stages: block-structure, extract-T, T-closedness, reduce, compatibility,
/// series, verify. Errors carry the stage name. Initial data default to zero.
CanonicalizationResult solve_canonicalization(const PNPair& pair, std::span<const Rational> point, unsigned order,
                                              const std::optional<ScalarField>& initial_U = std::nullopt);

}  // namespace nijkit
