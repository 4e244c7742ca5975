#pragma once

#include <map>
#include <span>
#include <vector>

#include "nijkit/matrix.hpp"
#include "nijkit/scalar.hpp"

namespace nijkit {

inline constexpr unsigned kMaxFormDegree = 3;

/// (1,1)-tensor field in fixed coordinates; entry (i, j) is A^i_j.
class OperatorField {
 public:
  OperatorField() = default;
  explicit OperatorField(ScalarMatrix m);

  static OperatorField identity(const Chart& chart);

  const Chart& chart() const noexcept { return m_.chart(); }
  std::size_t dim() const noexcept { return m_.rows(); }
  const ScalarMatrix& matrix() const noexcept { return m_; }
  const ScalarField& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const OperatorField& a, const OperatorField& b) { return a.m_ == b.m_; }

 private:
  ScalarMatrix m_;
};

/// Differential form of degree 0..3. Components are stored for strictly
/// increasing index tuples only; zero components are not stored.
class KForm {
 public:
  using Index = std::vector<std::size_t>;

  KForm() = default;
  /// The zero form of the given degree.
  KForm(Chart chart, unsigned degree);

  static KForm function(const ScalarField& f);
  /// dx_i.
  static KForm coordinate_differential(const Chart& chart, std::size_t i);
  /// 2-form with full matrix W (W(a, b) = form(e_a, e_b)); only the upper
  /// triangle is read.
  static KForm from_matrix(const ScalarMatrix& w);

  const Chart& chart() const noexcept { return chart_; }
  unsigned degree() const noexcept { return degree_; }
  const std::map<Index, ScalarField>& comps() const noexcept { return comps_; }
  bool is_zero() const noexcept { return comps_.empty(); }

  /// Component on an arbitrary index tuple (sign of the sorting permutation,
  /// zero on repeated indices).
  ScalarField component(std::span<const std::size_t> idx) const;
  ScalarField component(std::initializer_list<std::size_t> idx) const {
    return component(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  /// Adds c to the component on an arbitrary tuple, respecting antisymmetry.
  void add(std::span<const std::size_t> idx, const ScalarField& c);
  void add(std::initializer_list<std::size_t> idx, const ScalarField& c) {
    add(std::span<const std::size_t>(idx.begin(), idx.size()), c);
  }
  /// Degree-0 value.
  ScalarField value() const;
  /// Full skew matrix of a 2-form.
  ScalarMatrix matrix() const;

  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator-() const;
  KForm operator*(const ScalarField& f) const;

  friend bool operator==(const KForm& a, const KForm& b);

 private:
  Chart chart_;
  unsigned degree_ = 0;
  std::map<Index, ScalarField> comps_;
};

/// Throws DegreeOverflow if the degrees sum past 3.
KForm wedge(const KForm& a, const KForm& b);
/// Exterior derivative; throws DegreeOverflow on 3-forms.
KForm d(const KForm& a);
/// (A*a)_j = sum_i a_i A^i_j; 1-forms only (InvalidArgument otherwise).
KForm pullback(const OperatorField& A, const KForm& a);
/// Inserts A into each slot in turn; zero on functions.
KForm i_A(const OperatorField& A, const KForm& a);
/// d_A = i_A d - d i_A; degree <= 2.
KForm d_A(const OperatorField& A, const KForm& a);

/// b(A., A.) for a 2-form b.
KForm insert_both(const OperatorField& A, const KForm& two_form);

/// Coordinate change. `forward` gives the new coordinates as functions on
/// the old chart; `inverse` gives the old coordinates as functions on the
/// new chart. Operators transform as K L K^-1, 2-forms as K^-T W K^-1, with
/// K the Jacobian of `forward`, then the result is re-expressed through
/// `inverse`.
OperatorField change_coordinates(const OperatorField& L, std::span<const ScalarField> forward,
                                 std::span<const ScalarField> inverse);
KForm change_coordinates(const KForm& two_form, std::span<const ScalarField> forward,
                         std::span<const ScalarField> inverse);

}  // namespace nijkit
