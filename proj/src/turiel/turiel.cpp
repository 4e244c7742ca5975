#include "nijkit/turiel.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "nijkit/error.hpp"

namespace nijkit {

namespace {

std::string momentum_name(const std::string& base) {
  bool numbered = base.size() >= 2 && std::isalpha(static_cast<unsigned char>(base[0]));
  for (std::size_t i = 1; numbered && i < base.size(); ++i)
    numbered = std::isdigit(static_cast<unsigned char>(base[i]));
  return numbered ? "p" + base.substr(1) : "p_" + base;
}

Rational factorial(unsigned m) {
  Rational f = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

Chart cotangent_chart(const Chart& base) {
  std::vector<std::string> extra;
  std::set<std::string> seen(base.names().begin(), base.names().end());
  for (const auto& name : base.names()) {
    std::string p = momentum_name(name);
    if (!seen.insert(p).second)
      throw Error(ErrorCode::InvalidArgument, "momentum name " + p + " for " + name + " clashes with another coordinate");
    extra.push_back(p);
  }
  if (base.size() * 2 > kMaxVars) throw Error(ErrorCode::InvalidArgument, "cotangent chart exceeds the variable capacity");
  return base.extended(extra);
}

TurielExtension turiel_extend(const OperatorField& A) {
  const std::size_t n = A.dim();
  Chart cot = cotangent_chart(A.chart());
  ScalarMatrix Ac = A.matrix().rechart(cot);
  ScalarMatrix S(cot, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ScalarField s = ScalarField::zero(cot);
      for (std::size_t a = 0; a < n; ++a) {
        ScalarField c = Ac(a, i).partial(j) - Ac(a, j).partial(i);
        if (!c.is_zero()) s += ScalarField::variable(cot, n + a) * c;
      }
      S(i, j) = s;
      S(j, i) = -s;
    }
  ScalarMatrix L(cot, 2 * n, 2 * n);
  L.set_block(0, 0, Ac);
  L.set_block(n, 0, S);
  L.set_block(n, n, Ac.transpose());
  TurielExtension out{n, A, OperatorField(L), S, false};
  if (torsion(A).is_zero()) {
    if (!torsion(out.L_ext).is_zero())
      throw Error(ErrorCode::Internal, "extension of a Nijenhuis operator has nonzero torsion", "turiel_extend");
    if (!check_compatibility(PNPair{canonical_omega(cot), out.L_ext}).ok())
      throw Error(ErrorCode::Internal, "extension is not compatible with the canonical form", "turiel_extend");
    out.certified = true;
  }
  return out;
}

ScalarField newton_girard_sigma(std::size_t k, const Chart& chart) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "sigma index must be positive");
  if (chart.size() < k) throw Error(ErrorCode::InvalidArgument, "chart has fewer than k coordinates");
  ScalarField total = ScalarField::zero(chart);
  std::vector<unsigned> m(k + 1, 0);
  // enumerate m_i for i = k..1 with sum i*m_i = k
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == 0) {
      if (left != 0) return;
      ScalarField term(chart, Rational(1));
      Rational den = 1;
      for (std::size_t j = 1; j <= k; ++j) {
        if (!m[j]) continue;
        term *= ScalarField::variable(chart, j - 1).pow(m[j]);
        den *= factorial(m[j]);
      }
      total += term * Rational(1 / den);
      return;
    }
    for (std::size_t c = 0; c * i <= left; ++c) {
      m[i] = static_cast<unsigned>(c);
      rec(i - 1, left - c * i);
    }
    m[i] = 0;
  };
  rec(k, k);
  return total;
}

ScalarField newton_girard_sigma(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
  return newton_girard_sigma(k, Chart(names));
}

CompanionConversion first_to_second_companion(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<std::string> xs, ys;
  for (std::size_t i = 1; i <= n; ++i) {
    xs.push_back("x" + std::to_string(i));
    ys.push_back("y" + std::to_string(i));
  }
  CompanionConversion c;
  c.x_chart = Chart(xs);
  c.y_chart = Chart(ys);
  std::vector<ScalarField> sx;
  for (std::size_t i = 0; i < n; ++i) sx.push_back(ScalarField::variable(c.x_chart, i));
  c.A_first = first_companion(sx);
  ScalarMatrix power = c.A_first.matrix();
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) power = power * c.A_first.matrix();
    c.forward.push_back(power.trace() * Rational(-1, static_cast<long>(k)));
    c.inverse.push_back(newton_girard_sigma(k, c.y_chart));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (c.forward[k].substitute(c.inverse) != ScalarField::variable(c.y_chart, k))
      throw Error(ErrorCode::Internal, "y(sigma(y)) is not the identity", "first_to_second_companion");
    if (c.inverse[k].substitute(c.forward) != ScalarField::variable(c.x_chart, k))
      throw Error(ErrorCode::Internal, "sigma(y(x)) is not the identity", "first_to_second_companion");
  }
  c.A_second = change_coordinates(c.A_first, c.forward, c.inverse);
  if (!(c.A_second == second_companion(c.inverse)))
    throw Error(ErrorCode::Internal, "A in y coordinates is not the second companion form", "first_to_second_companion");
  return c;
}

PNPair cotangent_transport(const PNPair& p, std::span<const ScalarField> base_forward,
                           std::span<const ScalarField> base_inverse) {
  const std::size_t n = base_forward.size();
  if (n == 0 || base_inverse.size() != n || p.chart().size() != 2 * n)
    throw Error(ErrorCode::ShapeMismatch, "cotangent transport needs n base functions on a 2n chart");
  const Chart& old_chart = p.chart();
  const Chart& new_base = base_inverse[0].chart();
  Chart new_chart = cotangent_chart(new_base);
  // base Jacobian J = dy/dx on the old base chart, moved to the cotangent charts
  ScalarMatrix J = jacobian(base_forward);
  ScalarMatrix Jit = J.inverse().transpose().rechart(old_chart);
  std::vector<ScalarField> fwd, inv;
  for (std::size_t k = 0; k < n; ++k) fwd.push_back(base_forward[k].rechart(old_chart));
  for (std::size_t k = 0; k < n; ++k) {
    ScalarField q = ScalarField::zero(old_chart);
    for (std::size_t i = 0; i < n; ++i) q += Jit(k, i) * ScalarField::variable(old_chart, n + i);
    fwd.push_back(q);
  }
  std::vector<ScalarField> x_of_y;
  for (std::size_t k = 0; k < n; ++k) x_of_y.push_back(base_inverse[k].rechart(new_chart));
  for (std::size_t k = 0; k < n; ++k) inv.push_back(x_of_y[k]);
  // p = J^T q, J evaluated at x(y)
  ScalarMatrix Jy = J.substitute(x_of_y);
  for (std::size_t i = 0; i < n; ++i) {
    ScalarField pi = ScalarField::zero(new_chart);
    for (std::size_t k = 0; k < n; ++k) pi += Jy(k, i) * ScalarField::variable(new_chart, n + k);
    inv.push_back(pi);
  }
  return PNPair{change_coordinates(p.omega, fwd, inv), change_coordinates(p.L, fwd, inv)};
}

PNPair build_alternative_canonical(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<std::string> ys;
  for (std::size_t i = 1; i <= n; ++i) ys.push_back("y" + std::to_string(i));
  Chart chart = cotangent_chart(Chart(ys));
  std::vector<ScalarField> sigma;
  for (std::size_t k = 1; k <= n; ++k) sigma.push_back(newton_girard_sigma(k, chart));
  // second_companion needs a chart of dimension n; build the blocks directly
  ScalarMatrix A(chart, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) A(i, i + 1) = ScalarField::one(chart);
  for (std::size_t j = 0; j < n; ++j) A(n - 1, j) = -sigma[n - 1 - j];
  ScalarMatrix L(chart, 2 * n, 2 * n);
  L.set_block(0, 0, A);
  L.set_block(n, n, A.transpose());
  PNPair out{canonical_omega(chart), OperatorField(L)};
  if (!torsion(out.L).is_zero())
    throw Error(ErrorCode::Internal, "alternative canonical operator has nonzero torsion", "build_alternative_canonical");
  if (!check_compatibility(out).ok())
    throw Error(ErrorCode::Internal, "alternative canonical pair is not compatible", "build_alternative_canonical");
  return out;
}

std::vector<ScalarField> sigma_from_potential(const ScalarField& phi) {
  const std::size_t n = phi.chart().size();
  std::vector<ScalarField> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[n - 1 - j] = -phi.partial(j);
  return sigma;
}

}  // namespace nijkit
