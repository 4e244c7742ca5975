#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nijkit/monomial.hpp"
#include "nijkit/rational.hpp"

namespace nijkit {

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// decreasing graded-lex order with no zero coefficients, so the
/// representation is canonical and the leading term is terms().front().
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(const Monomial& m, const Rational& c);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Zero for the zero polynomial.
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;
  bool depends_on(std::size_t var) const noexcept;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly mul_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Product with all terms of total degree > max_degree dropped.
  Poly mul_truncated(const Poly& o, unsigned max_degree) const;
  Poly truncated(unsigned max_degree) const;

  Poly partial(std::size_t var) const;
  /// Antiderivative in `var` with zero integration constant.
  Poly integrate(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Coefficient of var^d as a polynomial (var's exponent set to 0).
  Poly coeff_in(std::size_t var, unsigned d) const;
  /// Substitutes images[i] (all with equal nvars) for variable i.
  Poly substitute(std::span<const Poly> images) const;
  /// Re-indexes variables: variable i becomes target_index[i] in a ring of
  /// `target_nvars` variables.
  Poly remap(std::size_t target_nvars, std::span<const std::size_t> target_index) const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Poly operator*(const Rational& c, const Poly& p);

/// Exact quotient a / b if b divides a, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor over Q[x], normalized monic (leading coefficient 1).
/// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Prints with the given variable names, e.g. "3/2*x1^2*x2 - x2 + 1".
std::string to_string(const Poly& p, const std::vector<std::string>& names);

}  // namespace nijkit
