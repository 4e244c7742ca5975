#include "nijkit/series.hpp"

#include <algorithm>

#include "nijkit/error.hpp"

namespace nijkit {

TruncatedSeries::TruncatedSeries(Chart chart, std::vector<Rational> base_point, unsigned order)
    : chart_(std::move(chart)), base_(std::move(base_point)), order_(order), body_(chart_.size()) {
  if (base_.size() != chart_.size()) throw Error(ErrorCode::InvalidArgument, "base point dimension mismatch");
}

TruncatedSeries::TruncatedSeries(Chart chart, std::vector<Rational> base_point, unsigned order, Poly body)
    : TruncatedSeries(std::move(chart), std::move(base_point), order) {
  if (body.nvars() != chart_.size()) throw Error(ErrorCode::ChartMismatch, "series body does not match chart");
  body_ = body.truncated(order_);
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
  for (const auto& t : body_.terms())
    if (t.mono == m) return t.coef;
  return Rational(0);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  require_same_chart(chart_, o.chart_, "series arithmetic");
  if (base_ != o.base_) throw Error(ErrorCode::InvalidArgument, "series expanded at different base points");
}

TruncatedSeries TruncatedSeries::operator-() const {
  return TruncatedSeries(chart_, base_, order_, -body_);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  unsigned ord = std::min(order_, o.order_);
  return TruncatedSeries(chart_, base_, ord, body_ + o.body_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  // a product is known through the smaller order, unless one factor has a
  // high-order zero which we do not track
  unsigned ord = std::min(order_, o.order_);
  TruncatedSeries r(chart_, base_, ord);
  r.body_ = body_.mul_truncated(o.body_, ord);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  return TruncatedSeries(chart_, base_, order_, body_ * c);
}

TruncatedSeries TruncatedSeries::inverse() const {
  Rational c0 = body_.constant_term();
  if (c0 == 0) throw Error(ErrorCode::DivisionByZero, "series with vanishing constant term is not invertible");
  // 1/(c0 (1 + r)) = (1/c0) sum_k (-r)^k ; r has no constant term
  Rational inv0 = 1 / c0;
  Poly r = body_ * inv0 - Poly::constant(body_.nvars(), Rational(1));
  Poly minus_r = -r;
  Poly acc = Poly::constant(body_.nvars(), Rational(1));
  Poly power = acc;
  for (unsigned k = 1; k <= order_ && !power.is_zero(); ++k) {
    power = power.mul_truncated(minus_r, order_);
    acc += power;
  }
  return TruncatedSeries(chart_, base_, order_, acc * inv0);
}

TruncatedSeries TruncatedSeries::partial(std::size_t var) const {
  if (var >= chart_.size()) throw Error(ErrorCode::ChartMismatch, "coordinate index outside chart");
  if (order_ == 0) return TruncatedSeries(chart_, base_, 0);
  return TruncatedSeries(chart_, base_, order_ - 1, body_.partial(var));
}

TruncatedSeries TruncatedSeries::integrate(std::size_t var) const {
  if (var >= chart_.size()) throw Error(ErrorCode::ChartMismatch, "coordinate index outside chart");
  return TruncatedSeries(chart_, base_, order_ + 1, body_.integrate(var));
}

TruncatedSeries TruncatedSeries::restrict_to_zero(std::span<const std::size_t> vars) const {
  std::vector<Term> kept;
  for (const auto& t : body_.terms()) {
    bool keep = std::all_of(vars.begin(), vars.end(), [&](std::size_t v) { return t.mono[v] == 0; });
    if (keep) kept.push_back(t);
  }
  return TruncatedSeries(chart_, base_, order_, Poly::from_terms(body_.nvars(), std::move(kept)));
}

TruncatedSeries TruncatedSeries::with_order(unsigned order) const {
  return TruncatedSeries(chart_, base_, order, body_);
}

ScalarField TruncatedSeries::to_scalar() const {
  std::vector<Poly> shifted;
  const std::size_t n = chart_.size();
  for (std::size_t i = 0; i < n; ++i)
    shifted.push_back(Poly::variable(n, i) - Poly::constant(n, base_[i]));
  return ScalarField(chart_, body_.substitute(shifted));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.chart_ == b.chart_ && a.base_ == b.base_ && a.order_ == b.order_ && a.body_ == b.body_;
}

namespace {

Poly shift_to_base(const Poly& p, std::span<const Rational> base) {
  const std::size_t n = p.nvars();
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Poly::variable(n, i) + Poly::constant(n, base[i]));
  return p.substitute(images);
}

}  // namespace

TruncatedSeries series_from_scalar(const ScalarField& f, std::span<const Rational> base_point, unsigned order) {
  const Chart& chart = f.chart();
  if (base_point.size() != chart.size()) throw Error(ErrorCode::InvalidArgument, "base point dimension mismatch");
  std::vector<Rational> base(base_point.begin(), base_point.end());
  if (f.den().evaluate(base_point) == 0)
    throw Error(ErrorCode::EvaluationFailure, "denominator vanishes at the base point");
  TruncatedSeries num(chart, base, order, shift_to_base(f.num(), base_point));
  if (f.is_polynomial()) return num;
  TruncatedSeries den(chart, base, order, shift_to_base(f.den(), base_point));
  return num * den.inverse();
}

TruncatedSeries compose(const ScalarField& f, std::span<const TruncatedSeries> args) {
  if (args.size() != f.chart().size()) throw Error(ErrorCode::InvalidArgument, "composition arity mismatch");
  if (args.empty()) throw Error(ErrorCode::InvalidArgument, "composition needs at least one argument");
  const TruncatedSeries& proto = args[0];
  unsigned ord = proto.order();
  for (const auto& a : args) ord = std::min(ord, a.order());
  auto eval = [&](const Poly& p) {
    std::vector<std::vector<TruncatedSeries>> powers(args.size());
    TruncatedSeries one(proto.chart(), proto.base_point(), ord,
                        Poly::constant(proto.chart().size(), Rational(1)));
    TruncatedSeries acc(proto.chart(), proto.base_point(), ord);
    for (const auto& t : p.terms()) {
      TruncatedSeries term = one * t.coef;
      for (std::size_t i = 0; i < args.size(); ++i) {
        unsigned e = t.mono[i];
        if (!e) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(one);
        while (cache.size() <= e) cache.push_back(cache.back() * args[i]);
        term = term * cache[e];
      }
      acc += term;
    }
    return acc;
  };
  TruncatedSeries num = eval(f.num());
  if (f.is_polynomial()) return num;
  return num * eval(f.den()).inverse();
}

}  // namespace nijkit
