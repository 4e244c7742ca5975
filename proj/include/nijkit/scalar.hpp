#pragma once

#include <span>
#include <string>
#include <vector>

#include "nijkit/chart.hpp"
#include "nijkit/poly.hpp"
#include "nijkit/rational.hpp"

namespace nijkit {

/// Exact rational function num/den on a chart.
///
/// Always canonical: gcd(num, den) = 1 and den has leading coefficient 1 in
/// graded-lex order. Structural equality is therefore mathematical equality.
class ScalarField {
 public:
  /// The zero field on the empty chart.
  ScalarField();
  ScalarField(Chart chart, const Rational& c);
  ScalarField(Chart chart, Poly num);
  /// Throws DivisionByZero if den is the zero polynomial.
  ScalarField(Chart chart, Poly num, Poly den);

  static ScalarField zero(const Chart& chart) { return ScalarField(chart, Rational(0)); }
  static ScalarField one(const Chart& chart) { return ScalarField(chart, Rational(1)); }
  static ScalarField variable(const Chart& chart, std::size_t i);
  static ScalarField variable(const Chart& chart, std::string_view name);

  const Chart& chart() const noexcept { return chart_; }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Precondition: is_constant().
  Rational constant_value() const;
  bool depends_on(std::size_t var) const noexcept;

  ScalarField operator-() const;
  ScalarField operator+(const ScalarField& o) const;
  ScalarField operator-(const ScalarField& o) const;
  ScalarField operator*(const ScalarField& o) const;
  /// Throws DivisionByZero when o is zero.
  ScalarField operator/(const ScalarField& o) const;
  ScalarField operator*(const Rational& c) const;
  ScalarField& operator+=(const ScalarField& o) { return *this = *this + o; }
  ScalarField& operator-=(const ScalarField& o) { return *this = *this - o; }
  ScalarField& operator*=(const ScalarField& o) { return *this = *this * o; }
  ScalarField pow(unsigned e) const;

  ScalarField partial(std::size_t var) const;
  ScalarField partial(const Coord& v) const;
  /// Throws EvaluationFailure when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  /// Composition: images[i] (on a common target chart) replaces coordinate i.
  ScalarField substitute(std::span<const ScalarField> images) const;
  /// Moves to another chart by coordinate name; every coordinate this field
  /// depends on must exist in `target`.
  ScalarField rechart(const Chart& target) const;

  friend bool operator==(const ScalarField& a, const ScalarField& b);
  friend bool operator!=(const ScalarField& a, const ScalarField& b) { return !(a == b); }

 private:
  ScalarField(Chart chart, Poly num, Poly den, bool canonical);
  void canonicalize();

  Chart chart_;
  Poly num_;
  Poly den_;
};

ScalarField operator*(const Rational& c, const ScalarField& f);

/// Canonical text in the expression grammar; parse_scalar inverts it.
std::string to_string(const ScalarField& f);

}  // namespace nijkit
