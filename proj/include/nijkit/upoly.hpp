#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nijkit/scalar.hpp"

namespace nijkit {

/// Univariate polynomial in a formal variable t with ScalarField
/// coefficients; coefficient i multiplies t^i. Over the empty chart this is
/// Q[t]. The coefficient ring is a field, so Euclidean division is exact.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Chart chart) : chart_(std::move(chart)) {}
  UPoly(Chart chart, std::vector<ScalarField> coeffs);

  static UPoly monomial(const Chart& chart, const ScalarField& c, std::size_t degree);
  static UPoly from_rationals(const std::vector<Rational>& coeffs);

  const Chart& chart() const noexcept { return chart_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return degree() == 0 && coeffs_[0].is_one(); }
  const std::vector<ScalarField>& coeffs() const noexcept { return coeffs_; }
  ScalarField coeff(std::size_t i) const;
  const ScalarField& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const ScalarField& c) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  ScalarField evaluate(const ScalarField& t) const;

  friend bool operator==(const UPoly& a, const UPoly& b);

 private:
  void trim();

  Chart chart_;
  std::vector<ScalarField> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun square-free decomposition of a monic polynomial: result[i] is the
/// product of the irreducible factors of multiplicity i + 1.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Distinct rational roots of a polynomial in Q[t].
std::vector<Rational> rational_roots(const UPoly& p);

/// Monic r with r^2 = q by triangular coefficient matching. Throws
/// Error(NotAFullSquare) naming the first violated coefficient identity;
/// Error(InvalidArgument) if q is not monic of even degree.
UPoly poly_square_root(const UPoly& q);

std::string to_string(const UPoly& p, const std::string& var = "t");

}  // namespace nijkit
