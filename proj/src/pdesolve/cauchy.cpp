#include <algorithm>
#include <map>
#include <numeric>

#include "nijkit/error.hpp"
#include "nijkit/pdesolve.hpp"

namespace nijkit {

namespace {

// A right-hand side prepared for repeated series evaluation. When the
// denominator is jet-free, H = sum_m c_m(x) * jet^m and each c_m is expanded
// once; otherwise we fall back to full composition.
class RhsEvaluator {
 public:
  RhsEvaluator(const JetSpace& J, const ScalarField& H, std::span<const Rational> base, unsigned order) : H_(H) {
    const std::size_t n = J.n();
    bool jet_free_den = true;
    for (std::size_t v = n; v < J.chart.size(); ++v)
      if (H.den().depends_on(v)) jet_free_den = false;
    if (!jet_free_den) return;
    fast_ = true;
    std::vector<std::size_t> keep(n);
    std::iota(keep.begin(), keep.end(), 0);
    std::vector<std::size_t> to_base(J.chart.size(), 0);
    for (std::size_t v = 0; v < n; ++v) to_base[v] = v;
    std::map<std::vector<unsigned>, std::vector<Term>> groups;
    for (const Term& t : H.num().terms()) {
      std::vector<unsigned> jet(J.chart.size() - n);
      Monomial xm(n);
      for (std::size_t v = 0; v < J.chart.size(); ++v) {
        if (v < n)
          xm.set(v, t.mono[v]);
        else
          jet[v - n] = t.mono[v];
      }
      groups[jet].push_back({xm, t.coef});
    }
    const Poly den = H.den().remap(n, to_base);
    for (auto& [jet, terms] : groups) {
      ScalarField coef(J.base, Poly::from_terms(n, std::move(terms)), den);
      parts_.push_back({jet, series_from_scalar(coef, base, order)});
    }
  }

  // args: series for every jet coordinate
  TruncatedSeries operator()(std::span<const TruncatedSeries> args, std::size_t n) const {
    if (!fast_) return compose(H_, args);
    TruncatedSeries sum;
    bool first = true;
    for (const auto& [jet, c] : parts_) {
      TruncatedSeries term = c;
      for (std::size_t k = 0; k < jet.size(); ++k)
        for (unsigned e = 0; e < jet[k]; ++e) term = term * args[n + k];
      if (first) {
        sum = term;
        first = false;
      } else {
        sum += term;
      }
    }
    if (first) return args[0] * Rational(0);
    return sum;
  }

 private:
  ScalarField H_;
  bool fast_ = false;
  std::vector<std::pair<std::vector<unsigned>, TruncatedSeries>> parts_;
};

void require_line_series(const TruncatedSeries& s, const Chart& base, std::span<const Rational> point,
                         const char* what) {
  require_same_chart(s.chart(), base, what);
  if (!std::equal(s.base_point().begin(), s.base_point().end(), point.begin(), point.end()))
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is expanded around a different point");
  for (std::size_t v = 0; v + 1 < base.size(); ++v)
    if (s.body().depends_on(v))
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " must depend on " + base.name(base.size() - 1) +
                                                  " only");
}

std::vector<TruncatedSeries> jet_args(const JetSpace& J, std::span<const TruncatedSeries> xs,
                                      const std::vector<TruncatedSeries>& f) {
  const std::size_t n = J.n();
  std::vector<TruncatedSeries> args(xs.begin(), xs.end());
  for (const auto& fs : f) args.push_back(fs);
  for (const auto& fs : f) args.push_back(fs.partial(n - 1));
  for (const auto& fs : f) args.push_back(fs * Rational(0));
  return args;
}

std::vector<std::size_t> line_vars(std::size_t n) {
  std::vector<std::size_t> v(n - 1);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::vector<TruncatedSeries> cauchy_series_solve(const FirstOrderSystem& sys, std::span<const Rational> base,
                                                 const std::vector<TruncatedSeries>& initial, unsigned order,
                                                 std::vector<std::size_t> variable_order) {
  const JetSpace& J = sys.jets;
  const std::size_t n = J.n(), r = J.r();
  if (base.size() != n) throw Error(ErrorCode::ShapeMismatch, "base point has the wrong dimension");
  if (initial.size() != r) throw Error(ErrorCode::ShapeMismatch, "need initial data for every unknown");
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be at least 1");

  const CompatibilityCertificate cert = check_compatibility_conditions(sys);
  if (!cert.compatible) {
    std::string msg = "compatibility conditions fail";
    for (const auto& v : cert.violations) msg += "\n  " + v;
    throw Error(ErrorCode::IncompatibleSystem, msg);
  }

  if (variable_order.empty())
    for (std::size_t v = n - 1; v-- > 0;) variable_order.push_back(v);
  {
    std::vector<std::size_t> sorted = variable_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != line_vars(n))
      throw Error(ErrorCode::InvalidArgument, "variable order must be a permutation of the first n-1 coordinates");
  }

  std::vector<TruncatedSeries> f;
  for (const auto& s : initial) {
    require_line_series(s, J.base, base, "initial data");
    if (s.order() < order) throw Error(ErrorCode::InvalidArgument, "initial data is shorter than the requested order");
    f.push_back(s.with_order(order));
  }

  std::vector<TruncatedSeries> xs;
  for (std::size_t v = 0; v < n; ++v)
    xs.push_back(series_from_scalar(ScalarField::variable(J.base, v), base, order));

  std::vector<std::vector<RhsEvaluator>> rhs(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t s = 0; s < r; ++s) rhs[i].emplace_back(J, sys.H[i][s], base, order);

  std::vector<bool> done(n - 1, false);
  for (std::size_t v : variable_order) {
    std::vector<std::size_t> zero;
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (!done[k] && k != v) zero.push_back(k);
    const std::vector<TruncatedSeries> start = f;
    // each pass fixes one more power of t_v
    for (unsigned pass = 0; pass <= order + 1; ++pass) {
      const std::vector<TruncatedSeries> args = jet_args(J, xs, f);
      std::vector<TruncatedSeries> next;
      for (std::size_t s = 0; s < r; ++s) {
        TruncatedSeries h = rhs[v][s](args, n).restrict_to_zero(zero);
        next.push_back((start[s] + h.integrate(v)).with_order(order));
      }
      const bool fixed = next == f;
      f = std::move(next);
      if (fixed) break;
    }
    done[v] = true;
  }

  // certificate: every equation through order - 1, and the initial data
  const std::vector<TruncatedSeries> args = jet_args(J, xs, f);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t s = 0; s < r; ++s) {
      TruncatedSeries res = (f[s].partial(i) - rhs[i][s](args, n)).with_order(order - 1);
      if (!res.is_zero())
        throw Error(ErrorCode::ResidualFailure, "equation d_" + J.base.name(i) + " " + J.unknowns[s] +
                                                    " keeps a residual below order " + std::to_string(order));
    }
  const std::vector<std::size_t> lv = line_vars(n);
  for (std::size_t s = 0; s < r; ++s)
    if (f[s].restrict_to_zero(lv) != initial[s].with_order(order))
      throw Error(ErrorCode::ResidualFailure, "solution for " + J.unknowns[s] + " lost its initial data");
  return f;
}

SecondOrderInitial zero_initial(const SolvedForm& sys, unsigned order) {
  SecondOrderInitial in{TruncatedSeries(sys.jets.base, sys.point, order), {}};
  for (std::size_t s = 0; s + 1 < sys.jets.n(); ++s) in.grad.emplace_back(sys.jets.base, sys.point, order);
  return in;
}

SecondOrderInitial initial_from(const SolvedForm& sys, const ScalarField& U, unsigned order) {
  const Chart& c = sys.jets.base;
  const ScalarField u = U.rechart(c);
  const std::vector<std::size_t> lv = line_vars(c.size());
  SecondOrderInitial in{series_from_scalar(u, sys.point, order).restrict_to_zero(lv), {}};
  for (std::size_t s = 0; s + 1 < c.size(); ++s)
    in.grad.push_back(series_from_scalar(u.partial(s), sys.point, order).restrict_to_zero(lv));
  return in;
}

TruncatedSeries cauchy_series_solve(const SolvedForm& sys, const SecondOrderInitial& initial, unsigned order,
                                    std::vector<std::size_t> variable_order) {
  const Chart& c = sys.jets.base;
  const std::size_t n = c.size();
  if (order < 2) throw Error(ErrorCode::InvalidArgument, "order must be at least 2");
  if (initial.grad.size() + 1 != n) throw Error(ErrorCode::ShapeMismatch, "need n-1 gradient components");
  require_line_series(initial.v, c, sys.point, "initial value");
  if (initial.v.order() < order) throw Error(ErrorCode::InvalidArgument, "initial data is shorter than the requested order");

  // the gradient f_s = U_xs is solved one order lower
  std::vector<TruncatedSeries> f0;
  for (const auto& g : initial.grad) f0.push_back(g);
  f0.push_back(initial.v.partial(n - 1));
  const std::vector<TruncatedSeries> f =
      cauchy_series_solve(sys.to_first_order(), sys.point, f0, order - 1, std::move(variable_order));

  // U = U(0) + sum_d (1/d) [sum_s t_s f_s]_d
  Poly radial(n);
  for (std::size_t s = 0; s < n; ++s) {
    Monomial ts(n);
    ts.set(s, 1);
    radial += f[s].body().mul_monomial(ts, Rational(1));
  }
  std::vector<Term> terms;
  for (const Term& t : radial.terms()) terms.push_back({t.mono, t.coef / Rational(t.mono.degree())});
  terms.push_back({Monomial(n), initial.v.coefficient(Monomial(n))});
  TruncatedSeries U(c, sys.point, order, Poly::from_terms(n, std::move(terms)));

  if (U.restrict_to_zero(line_vars(n)) != initial.v.with_order(order))
    throw Error(ErrorCode::ResidualFailure, "recovered U does not match the initial line data");

  // the original equations d(A* dU) = Omega through order - 2
  std::vector<TruncatedSeries> dU, Aser;
  for (std::size_t i = 0; i < n; ++i) dU.push_back(U.partial(i));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = k + 1; j < n; ++j) {
      TruncatedSeries res = -series_from_scalar(sys.omega.component({k, j}), sys.point, order);
      for (std::size_t i = 0; i < n; ++i) {
        const ScalarField ct = sys.A(i, j).partial(k) - sys.A(i, k).partial(j);
        res += series_from_scalar(sys.A(i, j), sys.point, order) * dU[i].partial(k);
        res += -(series_from_scalar(sys.A(i, k), sys.point, order) * dU[i].partial(j));
        if (!ct.is_zero()) res += series_from_scalar(ct, sys.point, order) * dU[i];
      }
      if (!res.with_order(order - 2).is_zero())
        throw Error(ErrorCode::ResidualFailure, "equation (" + c.name(k) + "," + c.name(j) +
                                                    ") keeps a residual below order " + std::to_string(order - 1));
    }
  return U;
}

}  // namespace nijkit
