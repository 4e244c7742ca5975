#include "nijkit/error.hpp"
#include "nijkit/pdesolve.hpp"

namespace nijkit {

namespace {

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw e.with_stage(stage);
  }
}

std::optional<unsigned> lowest_degree(const ScalarField& e, std::span<const Rational> point, unsigned fallback) {
  if (e.is_zero()) return std::nullopt;
  const unsigned ord = e.is_polynomial() ? e.num().total_degree() : fallback;
  const TruncatedSeries s = series_from_scalar(e, point, ord);
  if (s.is_zero()) return ord + 1;  // nothing below the expansion order
  unsigned best = ord;
  for (const Term& t : s.body().terms()) best = std::min(best, t.mono.degree());
  return best;
}

}  // namespace

CanonicalizationResult solve_canonicalization(const PNPair& pair, std::span<const Rational> point, unsigned order,
                                              const std::optional<ScalarField>& initial_U) {
  const Chart& chart = pair.chart();
  const std::size_t n = pair.n();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "canonicalization needs n >= 2", "input");
  std::vector<Rational> full(point.begin(), point.end());
  if (full.size() == n) full.resize(2 * n, Rational(0));
  if (full.size() != 2 * n) throw Error(ErrorCode::ShapeMismatch, "point must have n or 2n entries", "input");
  const std::vector<Rational> xpoint(full.begin(), full.begin() + static_cast<long>(n));
  const Chart xc(std::vector<std::string>(chart.names().begin(), chart.names().begin() + static_cast<long>(n)));

  CanonicalizationResult out;

  const ScalarMatrix S_hat = staged("block-structure", [&] {
    JacobiRowResult jr = jacobi_row_structure(pair.L);
    if (!jr.ok) throw Error(ErrorCode::ShapeMismatch, jr.failure);
    return jr.S_hat;
  });

  out.T = staged("extract-T", [&] {
    ScalarMatrix T = S_hat - canonical_S(chart, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t v = n; v < 2 * n; ++v)
          if (T(i, j).depends_on(v))
            throw Error(ErrorCode::PreconditionFailed, "T entry (" + std::to_string(i + 1) + "," +
                                                           std::to_string(j + 1) + ") depends on " + chart.name(v));
    return T.rechart(xc);
  });

  const OperatorField A(canonical_A(xc, n));
  const KForm omega = staged("T-closedness", [&] {
    KForm t = KForm::from_matrix(out.T);
    if (!d(t).is_zero()) throw Error(ErrorCode::NotClosed, "dT != 0");
    if (!d(i_A(A, t)).is_zero()) throw Error(ErrorCode::NotClosed, "dT_A != 0");
    // S~ - S = T + matrix(d(A* dU)), so U must solve d(A* dU) = -T
    return -t;
  });

  out.system = staged("reduce", [&] { return reduce_to_solved_form(A, omega, xpoint); });

  out.compatibility = staged("compatibility", [&] {
    CompatibilityCertificate cert = check_compatibility_conditions(out.system);
    if (!cert.compatible) {
      std::string msg = "compatibility conditions fail";
      for (const auto& v : cert.violations) msg += "\n  " + v;
      throw Error(ErrorCode::IncompatibleSystem, msg);
    }
    return cert;
  });

  out.U = staged("series", [&] {
    SecondOrderInitial in =
        initial_U ? initial_from(out.system, *initial_U, order) : zero_initial(out.system, order);
    return cauchy_series_solve(out.system, in, order);
  });

  staged("verify", [&] {
    out.transformed = generating_transform(out.U.to_scalar().rechart(chart), pair);
    JacobiRowResult jr = jacobi_row_structure(out.transformed.L);
    if (!jr.ok) throw Error(ErrorCode::ResidualFailure, "transformed operator lost its block shape: " + jr.failure);
    const ScalarMatrix diff = jr.S_hat - canonical_S(chart, n);
    std::optional<unsigned> low;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto dg = lowest_degree(diff(i, j), full, order + 2);
        if (dg && (!low || *dg < *low)) low = dg;
      }
    out.residual_degree = low;
    if (low && *low + 1 < order)
      throw Error(ErrorCode::ResidualFailure, "S~ - S has a term of total degree " + std::to_string(*low));
    return 0;
  });
  return out;
}

}  // namespace nijkit
