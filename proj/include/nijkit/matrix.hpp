#pragma once

#include <span>
#include <string>
#include <vector>

#include "nijkit/scalar.hpp"

namespace nijkit {

/// Dense row-major matrix of ScalarFields sharing one chart.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  /// Zero matrix.
  ScalarMatrix(Chart chart, std::size_t rows, std::size_t cols);
  ScalarMatrix(Chart chart, std::size_t rows, std::size_t cols, std::vector<ScalarField> entries);

  static ScalarMatrix identity(const Chart& chart, std::size_t n);
  /// Rows of expression strings parsed on `chart`.
  static ScalarMatrix parse(const Chart& chart, const std::vector<std::vector<std::string>>& rows);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const ScalarField& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  ScalarField& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const ScalarField& c) const;
  ScalarMatrix operator-() const;
  ScalarMatrix transpose() const;
  ScalarMatrix pow(unsigned e) const;
  ScalarField trace() const;
  bool is_zero() const;
  bool is_skew() const;

  /// Fraction-free (Bareiss) determinant.
  ScalarField determinant() const;
  /// Gauss-Jordan inverse over the rational-function field. Throws
  /// Error(DivisionByZero) for a singular matrix.
  ScalarMatrix inverse() const;
  /// Rank over the rational-function field.
  std::size_t rank() const;

  /// Entrywise evaluation; the result lives on the empty chart.
  ScalarMatrix evaluate(std::span<const Rational> point) const;
  ScalarMatrix substitute(std::span<const ScalarField> images) const;
  ScalarMatrix rechart(const Chart& target) const;
  ScalarMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const ScalarMatrix& b);

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  Chart chart_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ScalarField> a_;
};

/// Jacobian d(images_i)/d(coordinate j) of a list of fields on one chart.
ScalarMatrix jacobian(std::span<const ScalarField> fields);

std::vector<std::vector<std::string>> to_strings(const ScalarMatrix& m);

}  // namespace nijkit
