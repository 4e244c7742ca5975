#include "nijkit/scalar.hpp"

#include "nijkit/error.hpp"

namespace nijkit {

namespace {

Poly exact_div(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::Internal, "expected exact division");
  return *q;
}

}  // namespace

ScalarField::ScalarField() : num_(0), den_(Poly::constant(0, Rational(1))) {}

ScalarField::ScalarField(Chart chart, const Rational& c)
    : chart_(std::move(chart)),
      num_(Poly::constant(chart_.size(), c)),
      den_(Poly::constant(chart_.size(), Rational(1))) {}

ScalarField::ScalarField(Chart chart, Poly num)
    : chart_(std::move(chart)), num_(std::move(num)), den_(Poly::constant(chart_.size(), Rational(1))) {
  if (num_.nvars() != chart_.size()) throw Error(ErrorCode::ChartMismatch, "polynomial does not match chart");
}

ScalarField::ScalarField(Chart chart, Poly num, Poly den)
    : chart_(std::move(chart)), num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != chart_.size() || den_.nvars() != chart_.size())
    throw Error(ErrorCode::ChartMismatch, "polynomial does not match chart");
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  canonicalize();
}

ScalarField::ScalarField(Chart chart, Poly num, Poly den, bool canonical)
    : chart_(std::move(chart)), num_(std::move(num)), den_(std::move(den)) {
  if (!canonical) canonicalize();
}

ScalarField ScalarField::variable(const Chart& chart, std::size_t i) {
  return ScalarField(chart, Poly::variable(chart.size(), i));
}

ScalarField ScalarField::variable(const Chart& chart, std::string_view name) {
  return variable(chart, chart.coord(name).index);
}

void ScalarField::canonicalize() {
  const std::size_t n = chart_.size();
  if (num_.is_zero()) {
    den_ = Poly::constant(n, Rational(1));
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_ * Rational(1 / den_.leading().coef);
      den_ = Poly::constant(n, Rational(1));
    }
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rational lc = den_.leading().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational ScalarField::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "field is not constant");
  return num_.constant_term();
}

bool ScalarField::depends_on(std::size_t var) const noexcept {
  return num_.depends_on(var) || den_.depends_on(var);
}

ScalarField ScalarField::operator-() const { return ScalarField(chart_, -num_, den_, true); }

ScalarField ScalarField::operator+(const ScalarField& o) const {
  require_same_chart(chart_, o.chart_, "scalar addition");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) return ScalarField(chart_, num_ + o.num_, den_, true);
  if (den_ == o.den_) return ScalarField(chart_, num_ + o.num_, den_, false);
  Poly g = gcd(den_, o.den_);
  if (g.is_one()) return ScalarField(chart_, num_ * o.den_ + o.num_ * den_, den_ * o.den_, false);
  Poly da = exact_div(den_, g), db = exact_div(o.den_, g);
  return ScalarField(chart_, num_ * db + o.num_ * da, da * o.den_, false);
}

ScalarField ScalarField::operator-(const ScalarField& o) const { return *this + (-o); }

ScalarField ScalarField::operator*(const ScalarField& o) const {
  require_same_chart(chart_, o.chart_, "scalar multiplication");
  if (is_zero() || o.is_zero()) return zero(chart_);
  if (den_.is_one() && o.den_.is_one()) return ScalarField(chart_, num_ * o.num_, den_, true);
  // cross-cancel so the result is already reduced
  Poly g1 = den_.is_one() ? den_ : gcd(o.num_, den_);
  Poly g2 = o.den_.is_one() ? o.den_ : gcd(num_, o.den_);
  Poly an = g2.is_one() ? num_ : exact_div(num_, g2);
  Poly bd = g2.is_one() ? o.den_ : exact_div(o.den_, g2);
  Poly bn = g1.is_one() ? o.num_ : exact_div(o.num_, g1);
  Poly ad = g1.is_one() ? den_ : exact_div(den_, g1);
  Poly den = ad * bd;
  Rational lc = den.leading().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    return ScalarField(chart_, an * bn * inv, den * inv, true);
  }
  return ScalarField(chart_, an * bn, den, true);
}

ScalarField ScalarField::operator/(const ScalarField& o) const {
  require_same_chart(chart_, o.chart_, "scalar division");
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero field");
  return *this * ScalarField(chart_, o.den_, o.num_, false);
}

ScalarField ScalarField::operator*(const Rational& c) const {
  if (c == 0) return zero(chart_);
  return ScalarField(chart_, num_ * c, den_, true);
}

ScalarField operator*(const Rational& c, const ScalarField& f) { return f * c; }

ScalarField ScalarField::pow(unsigned e) const {
  return ScalarField(chart_, num_.pow(e), den_.pow(e), true);
}

ScalarField ScalarField::partial(std::size_t var) const {
  if (var >= chart_.size()) throw Error(ErrorCode::ChartMismatch, "coordinate index outside chart");
  if (den_.is_one()) return ScalarField(chart_, num_.partial(var), den_, true);
  // (n/d)' = (n' d - n d') / d^2
  Poly top = num_.partial(var) * den_ - num_ * den_.partial(var);
  return ScalarField(chart_, std::move(top), den_ * den_, false);
}

ScalarField ScalarField::partial(const Coord& v) const {
  if (v.index >= chart_.size() || chart_.name(v.index) != v.name)
    throw Error(ErrorCode::ChartMismatch, "coordinate '" + v.name + "' is not in the field's chart");
  return partial(v.index);
}

Rational ScalarField::evaluate(std::span<const Rational> point) const {
  if (point.size() != chart_.size()) throw Error(ErrorCode::InvalidArgument, "point dimension mismatch");
  Rational d = den_.evaluate(point);
  if (d == 0) throw Error(ErrorCode::EvaluationFailure, "denominator " + to_string(den_, chart_.names()) + " vanishes at the point");
  return num_.evaluate(point) / d;
}

ScalarField ScalarField::substitute(std::span<const ScalarField> images) const {
  if (images.size() != chart_.size()) throw Error(ErrorCode::InvalidArgument, "substitution arity mismatch");
  if (images.empty()) return *this;
  const Chart& target = images[0].chart();
  bool polynomial = true;
  for (const auto& im : images) {
    require_same_chart(im.chart(), target, "substitution");
    polynomial = polynomial && im.is_polynomial();
  }
  if (polynomial) {
    std::vector<Poly> ps;
    ps.reserve(images.size());
    for (const auto& im : images) ps.push_back(im.num());
    return ScalarField(target, num_.substitute(ps), den_.substitute(ps));
  }
  auto eval = [&](const Poly& p) {
    ScalarField acc = zero(target);
    for (const auto& t : p.terms()) {
      ScalarField term(target, t.coef);
      for (std::size_t i = 0; i < p.nvars(); ++i)
        if (t.mono[i]) term = term * images[i].pow(t.mono[i]);
      acc += term;
    }
    return acc;
  };
  return eval(num_) / eval(den_);
}

ScalarField ScalarField::rechart(const Chart& target) const {
  if (chart_ == target) return *this;
  std::vector<std::size_t> index(chart_.size(), 0);
  for (std::size_t i = 0; i < chart_.size(); ++i) {
    auto j = target.index_of(chart_.name(i));
    if (j) {
      index[i] = *j;
    } else if (depends_on(i)) {
      throw Error(ErrorCode::ChartMismatch, "coordinate '" + chart_.name(i) + "' missing from target chart");
    }
  }
  return ScalarField(target, num_.remap(target.size(), index), den_.remap(target.size(), index), true);
}

bool operator==(const ScalarField& a, const ScalarField& b) {
  return a.chart_ == b.chart_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string to_string(const ScalarField& f) {
  const auto& names = f.chart().names();
  if (f.is_polynomial()) return to_string(f.num(), names);
  return "(" + to_string(f.num(), names) + ")/(" + to_string(f.den(), names) + ")";
}

}  // namespace nijkit
