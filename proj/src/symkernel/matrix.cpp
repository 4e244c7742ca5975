#include "nijkit/matrix.hpp"

#include "nijkit/error.hpp"
#include "nijkit/parser.hpp"

namespace nijkit {

ScalarMatrix::ScalarMatrix(Chart chart, std::size_t rows, std::size_t cols)
    : chart_(chart), rows_(rows), cols_(cols), a_(rows * cols, ScalarField::zero(chart)) {}

ScalarMatrix::ScalarMatrix(Chart chart, std::size_t rows, std::size_t cols, std::vector<ScalarField> entries)
    : chart_(std::move(chart)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "matrix entry count does not match shape");
  for (const auto& e : a_) require_same_chart(e.chart(), chart_, "matrix entry");
}

ScalarMatrix ScalarMatrix::identity(const Chart& chart, std::size_t n) {
  ScalarMatrix m(chart, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarField::one(chart);
  return m;
}

ScalarMatrix ScalarMatrix::parse(const Chart& chart, const std::vector<std::vector<std::string>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  ScalarMatrix m(chart, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_scalar(rows[i][j], chart);
  }
  return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape");
  ScalarMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const { return *this + (-o); }

ScalarMatrix ScalarMatrix::operator-() const {
  ScalarMatrix r(*this);
  for (auto& e : r.a_) e = -e;
  return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape");
  require_same_chart(chart_, o.chart_, "matrix product");
  ScalarMatrix r(chart_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const ScalarField& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarField& c) const {
  ScalarMatrix r(*this);
  for (auto& e : r.a_) e = e * c;
  return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix r(chart_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ScalarMatrix ScalarMatrix::pow(unsigned e) const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
  ScalarMatrix r = identity(chart_, rows_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

ScalarField ScalarMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "trace of a non-square matrix");
  ScalarField t = ScalarField::zero(chart_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool ScalarMatrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

ScalarField ScalarMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return ScalarField::one(chart_);
  ScalarMatrix m(*this);
  ScalarField prev = ScalarField::one(chart_);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return ScalarField::zero(chart_);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = ScalarField::zero(chart_);
    }
    prev = m(k, k);
  }
  ScalarField d = m(n - 1, n - 1);
  return negate ? -d : d;
}

ScalarMatrix ScalarMatrix::inverse() const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  ScalarMatrix m(*this);
  ScalarMatrix inv = identity(chart_, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::DivisionByZero, "matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    ScalarField piv = ScalarField::one(chart_) / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = m(k, j) * piv;
      inv(k, j) = inv(k, j) * piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      ScalarField f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::size_t ScalarMatrix::rank() const {
  ScalarMatrix m(*this);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      ScalarField f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

ScalarMatrix ScalarMatrix::evaluate(std::span<const Rational> point) const {
  Chart empty;
  ScalarMatrix r(empty, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ScalarField(empty, a_[i].evaluate(point));
  return r;
}

ScalarMatrix ScalarMatrix::substitute(std::span<const ScalarField> images) const {
  Chart target = images.empty() ? Chart() : images[0].chart();
  ScalarMatrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].substitute(images);
  return r;
}

ScalarMatrix ScalarMatrix::rechart(const Chart& target) const {
  ScalarMatrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].rechart(target);
  return r;
}

ScalarMatrix ScalarMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  ScalarMatrix r(chart_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void ScalarMatrix::set_block(std::size_t r0, std::size_t c0, const ScalarMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  require_same_chart(chart_, b.chart_, "set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.chart_ == b.chart_ && a.a_ == b.a_;
}

ScalarMatrix jacobian(std::span<const ScalarField> fields) {
  if (fields.empty()) return {};
  const Chart& chart = fields[0].chart();
  ScalarMatrix j(chart, fields.size(), chart.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    require_same_chart(fields[i].chart(), chart, "jacobian");
    for (std::size_t k = 0; k < chart.size(); ++k) j(i, k) = fields[i].partial(k);
  }
  return j;
}

std::vector<std::vector<std::string>> to_strings(const ScalarMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

}  // namespace nijkit
