#include <map>

#include "nijkit/error.hpp"
#include "nijkit/pdesolve.hpp"

namespace nijkit {

KForm cohomological_lhs(const OperatorField& A, const ScalarField& U) {
  require_same_chart(A.chart(), U.chart(), "cohomological equation");
  return d(pullback(A, d(KForm::function(U))));
}

namespace {

OperatorField diagonal_operator(const DiagonalProblem& p) {
  const Chart& c = p.omega.chart();
  ScalarMatrix m(c, c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) m(i, i) = p.lambdas[i];
  return OperatorField(m);
}

std::string y(const Chart& c, std::size_t i) { return c.name(i); }

}  // namespace

void validate(const DiagonalProblem& p) {
  const Chart& c = p.omega.chart();
  const std::size_t n = c.size();
  if (p.omega.degree() != 2) throw Error(ErrorCode::InvalidArgument, "omega must be a 2-form");
  if (p.lambdas.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "need one eigenvalue per coordinate (" + std::to_string(n) + ")");
  for (const auto& l : p.lambdas) require_same_chart(l.chart(), c, "eigenvalue");
  // a collision is the more informative diagnosis, so it goes first
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.lambdas[i] == p.lambdas[j])
        throw Error(ErrorCode::EigenvalueCollision,
                    "lambda_" + std::to_string(i + 1) + " = lambda_" + std::to_string(j + 1) + " = " +
                        to_string(p.lambdas[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && p.lambdas[i].depends_on(k))
        throw Error(ErrorCode::PreconditionFailed,
                    "lambda_" + std::to_string(i + 1) + " = " + to_string(p.lambdas[i]) + " depends on " + y(c, k));
  if (!d(p.omega).is_zero()) throw Error(ErrorCode::NotClosed, "d(Omega) != 0");
  if (!d(i_A(diagonal_operator(p), p.omega)).is_zero()) throw Error(ErrorCode::NotClosed, "d(i_A Omega) != 0");
}

ScalarField solve_diagonal(const DiagonalProblem& p) {
  validate(p);
  const Chart& c = p.omega.chart();
  const std::size_t n = c.size();

  // g_ij = U_ij for i != j
  std::vector<std::vector<ScalarField>> g(n, std::vector<ScalarField>(n, ScalarField::zero(c)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      g[i][j] = p.omega.component({i, j}) / (p.lambdas[j] - p.lambdas[i]);
      g[j][i] = g[i][j];
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const ScalarField a = g[i][j].partial(k), b = g[j][k].partial(i), e = g[i][k].partial(j);
        if (a != b || b != e) {
          std::string msg = "third derivatives disagree: d/d" + y(c, k) + " g_" + std::to_string(i + 1) +
                            std::to_string(j + 1) + " = " + to_string(a) + ", d/d" + y(c, i) + " g_" +
                            std::to_string(j + 1) + std::to_string(k + 1) + " = " + to_string(b) + ", d/d" + y(c, j) +
                            " g_" + std::to_string(i + 1) + std::to_string(k + 1) + " = " + to_string(e);
          throw Error(ErrorCode::ConsistencyViolation, msg);
        }
      }

  // Laurent monomials of U keyed by signed exponent vectors.
  using Exps = std::vector<int>;
  std::map<Exps, Rational> u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const ScalarField& gij = g[i][j];
      if (gij.is_zero()) continue;
      const Poly& den = gij.den();
      if (den.size() != 1)
        throw Error(ErrorCode::NonIntegrableMonomial,
                    "g_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + to_string(gij) +
                        " has a non-monomial denominator");
      const Monomial& dm = den.leading().mono;
      const Rational dc = den.leading().coef;
      for (const Term& t : gij.num().terms()) {
        Exps gamma(n);
        for (std::size_t v = 0; v < n; ++v)
          gamma[v] = static_cast<int>(t.mono[v]) - static_cast<int>(dm[v]) + (v == i || v == j ? 1 : 0);
        if (gamma[i] == 0 || gamma[j] == 0)
          throw Error(ErrorCode::NonIntegrableMonomial,
                      "term of g_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + to_string(gij) +
                          " integrates to a logarithm in " + y(c, gamma[i] == 0 ? i : j));
        if (u.count(gamma)) continue;  // fixed by an earlier pair; consistency makes them agree
        u[gamma] = t.coef / dc / Rational(gamma[i] * gamma[j]);
      }
    }

  std::vector<int> shift(n, 0);
  for (const auto& [e, coef] : u)
    for (std::size_t v = 0; v < n; ++v) shift[v] = std::max(shift[v], -e[v]);
  std::vector<Term> terms;
  for (const auto& [e, coef] : u) {
    Monomial m(n);
    for (std::size_t v = 0; v < n; ++v) m.set(v, static_cast<unsigned>(e[v] + shift[v]));
    terms.push_back({m, coef});
  }
  Monomial dm(n);
  for (std::size_t v = 0; v < n; ++v) dm.set(v, static_cast<unsigned>(shift[v]));
  ScalarField U(c, Poly::from_terms(n, std::move(terms)), Poly::term(dm, Rational(1)));

  if (cohomological_lhs(diagonal_operator(p), U) != p.omega)
    throw Error(ErrorCode::ResidualFailure, "diagonal solution " + to_string(U) + " does not reproduce Omega");
  return U;
}

ScalarField add_homogeneous(const DiagonalProblem& p, const ScalarField& U0, const std::vector<UPoly>& u) {
  const Chart& c = p.omega.chart();
  require_same_chart(U0.chart(), c, "particular solution");
  if (u.size() != c.size()) throw Error(ErrorCode::ShapeMismatch, "need one univariate function per coordinate");
  ScalarField U = U0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!u[i].chart().empty()) throw Error(ErrorCode::InvalidArgument, "homogeneous pieces must have rational coefficients");
    ScalarField yi = ScalarField::variable(c, i), power = ScalarField::one(c);
    for (int k = 0; k <= u[i].degree(); ++k) {
      U += power * u[i].coeff(static_cast<unsigned>(k)).constant_value();
      power *= yi;
    }
  }
  if (cohomological_lhs(diagonal_operator(p), U) != p.omega)
    throw Error(ErrorCode::ResidualFailure, "homogeneous extension no longer solves the system");
  return U;
}

}  // namespace nijkit
