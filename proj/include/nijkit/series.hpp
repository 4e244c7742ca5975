#pragma once

#include <span>
#include <vector>

#include "nijkit/poly.hpp"
#include "nijkit/scalar.hpp"

namespace nijkit {

/// Multivariate power series in the shifted variables t_i = x_i - base_i,
/// known exactly through total degree order(). Terms above order() are never
/// stored. Operations that lose accuracy lower the order accordingly
/// (a partial derivative is valid one degree less, an antiderivative one more).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(Chart chart, std::vector<Rational> base_point, unsigned order);
  TruncatedSeries(Chart chart, std::vector<Rational> base_point, unsigned order, Poly body);

  const Chart& chart() const noexcept { return chart_; }
  const std::vector<Rational>& base_point() const noexcept { return base_; }
  unsigned order() const noexcept { return order_; }
  /// Coefficients as a polynomial in t.
  const Poly& body() const noexcept { return body_; }
  bool is_zero() const noexcept { return body_.is_zero(); }
  Rational coefficient(const Monomial& m) const;

  TruncatedSeries operator-() const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& c) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  /// Throws DivisionByZero when the constant term vanishes.
  TruncatedSeries inverse() const;
  TruncatedSeries partial(std::size_t var) const;
  /// Antiderivative in var vanishing on t_var = 0.
  TruncatedSeries integrate(std::size_t var) const;
  /// Keeps only terms with zero exponent in every listed variable.
  TruncatedSeries restrict_to_zero(std::span<const std::size_t> vars) const;
  TruncatedSeries with_order(unsigned order) const;

  /// Exact polynomial in the chart coordinates, x - base substituted for t.
  ScalarField to_scalar() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void check_compatible(const TruncatedSeries& o) const;

  Chart chart_;
  std::vector<Rational> base_;
  unsigned order_ = 0;
  Poly body_;
};

/// Taylor expansion through total degree `order`. Throws EvaluationFailure if
/// the denominator vanishes at the base point.
TruncatedSeries series_from_scalar(const ScalarField& f, std::span<const Rational> base_point,
                                   unsigned order);

/// Evaluates f (on any chart) with args[i] substituted for coordinate i. All
/// args share chart, base point and order.
TruncatedSeries compose(const ScalarField& f, std::span<const TruncatedSeries> args);

}  // namespace nijkit
