#include "nijkit/forms.hpp"

#include <algorithm>

#include "nijkit/error.hpp"

namespace nijkit {

OperatorField::OperatorField(ScalarMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error(ErrorCode::ShapeMismatch, "operator field must be square");
  if (m_.rows() != m_.chart().size())
    throw Error(ErrorCode::ShapeMismatch, "operator dimension " + std::to_string(m_.rows()) +
                                              " does not match chart dimension " + std::to_string(m_.chart().size()));
}

OperatorField OperatorField::identity(const Chart& chart) {
  return OperatorField(ScalarMatrix::identity(chart, chart.size()));
}

namespace {

// Sorts idx in place; returns +1/-1 for the permutation sign, 0 on a repeat.
int sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

void check_degree(unsigned k) {
  if (k > kMaxFormDegree)
    throw Error(ErrorCode::DegreeOverflow, "forms of degree " + std::to_string(k) + " are not supported (max 3)");
}

// All strictly increasing k-tuples of [0, n).
std::vector<KForm::Index> increasing_tuples(std::size_t n, unsigned k) {
  std::vector<KForm::Index> out;
  KForm::Index cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

KForm::KForm(Chart chart, unsigned degree) : chart_(std::move(chart)), degree_(degree) { check_degree(degree); }

KForm KForm::function(const ScalarField& f) {
  KForm r(f.chart(), 0);
  if (!f.is_zero()) r.comps_.emplace(Index{}, f);
  return r;
}

KForm KForm::coordinate_differential(const Chart& chart, std::size_t i) {
  KForm r(chart, 1);
  r.comps_.emplace(Index{i}, ScalarField::one(chart));
  return r;
}

KForm KForm::from_matrix(const ScalarMatrix& w) {
  if (!w.is_square() || w.rows() != w.chart().size())
    throw Error(ErrorCode::ShapeMismatch, "2-form matrix must be square of chart dimension");
  KForm r(w.chart(), 2);
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = i + 1; j < w.cols(); ++j)
      if (!w(i, j).is_zero()) r.comps_.emplace(Index{i, j}, w(i, j));
  return r;
}

ScalarField KForm::component(std::span<const std::size_t> idx) const {
  if (idx.size() != degree_) throw Error(ErrorCode::InvalidArgument, "component index has the wrong length");
  Index key(idx.begin(), idx.end());
  int s = sort_sign(key);
  if (s == 0) return ScalarField::zero(chart_);
  auto it = comps_.find(key);
  if (it == comps_.end()) return ScalarField::zero(chart_);
  return s > 0 ? it->second : -it->second;
}

void KForm::add(std::span<const std::size_t> idx, const ScalarField& c) {
  if (idx.size() != degree_) throw Error(ErrorCode::InvalidArgument, "component index has the wrong length");
  for (auto i : idx)
    if (i >= chart_.size()) throw Error(ErrorCode::InvalidArgument, "component index out of range");
  if (c.is_zero()) return;
  Index key(idx.begin(), idx.end());
  int s = sort_sign(key);
  if (s == 0) return;
  ScalarField v = s > 0 ? c : -c;
  auto it = comps_.find(key);
  if (it == comps_.end()) {
    comps_.emplace(std::move(key), v);
  } else {
    it->second += v;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

ScalarField KForm::value() const {
  if (degree_ != 0) throw Error(ErrorCode::InvalidArgument, "value() of a form of positive degree");
  return comps_.empty() ? ScalarField::zero(chart_) : comps_.begin()->second;
}

ScalarMatrix KForm::matrix() const {
  if (degree_ != 2) throw Error(ErrorCode::InvalidArgument, "matrix() needs a 2-form");
  ScalarMatrix m(chart_, chart_.size(), chart_.size());
  for (const auto& [k, v] : comps_) {
    m(k[0], k[1]) = v;
    m(k[1], k[0]) = -v;
  }
  return m;
}

KForm KForm::operator+(const KForm& o) const {
  require_same_chart(chart_, o.chart_, "form sum");
  if (degree_ != o.degree_) throw Error(ErrorCode::InvalidArgument, "sum of forms of different degrees");
  KForm r(*this);
  for (const auto& [k, v] : o.comps_) r.add(k, v);
  return r;
}

KForm KForm::operator-() const {
  KForm r(*this);
  for (auto& [k, v] : r.comps_) v = -v;
  return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::operator*(const ScalarField& f) const {
  require_same_chart(chart_, f.chart(), "form scaling");
  KForm r(chart_, degree_);
  if (f.is_zero()) return r;
  for (const auto& [k, v] : comps_) r.comps_.emplace(k, v * f);
  return r;
}

bool operator==(const KForm& a, const KForm& b) {
  return a.degree_ == b.degree_ && a.chart_ == b.chart_ && a.comps_ == b.comps_;
}

KForm wedge(const KForm& a, const KForm& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  check_degree(a.degree() + b.degree());
  KForm r(a.chart(), a.degree() + b.degree());
  for (const auto& [ka, va] : a.comps())
    for (const auto& [kb, vb] : b.comps()) {
      KForm::Index idx = ka;
      idx.insert(idx.end(), kb.begin(), kb.end());
      r.add(idx, va * vb);
    }
  return r;
}

KForm d(const KForm& a) {
  check_degree(a.degree() + 1);
  KForm r(a.chart(), a.degree() + 1);
  for (const auto& [k, v] : a.comps())
    for (std::size_t m = 0; m < a.chart().size(); ++m) {
      if (!v.depends_on(m)) continue;
      KForm::Index idx{m};
      idx.insert(idx.end(), k.begin(), k.end());
      r.add(idx, v.partial(m));
    }
  return r;
}

KForm pullback(const OperatorField& A, const KForm& a) {
  if (a.degree() != 1) throw Error(ErrorCode::InvalidArgument, "pullback is defined on 1-forms only");
  return i_A(A, a);
}

KForm i_A(const OperatorField& A, const KForm& a) {
  require_same_chart(A.chart(), a.chart(), "i_A");
  KForm r(a.chart(), a.degree());
  if (a.degree() == 0) return r;
  const std::size_t n = a.chart().size();
  for (const auto& tuple : increasing_tuples(n, a.degree())) {
    ScalarField acc = ScalarField::zero(a.chart());
    for (std::size_t slot = 0; slot < tuple.size(); ++slot) {
      KForm::Index idx = tuple;
      for (std::size_t m = 0; m < n; ++m) {
        const ScalarField& am = A(m, tuple[slot]);
        if (am.is_zero()) continue;
        idx[slot] = m;
        ScalarField c = a.component(idx);
        if (!c.is_zero()) acc += c * am;
      }
    }
    r.add(tuple, acc);
  }
  return r;
}

KForm d_A(const OperatorField& A, const KForm& a) {
  if (a.degree() >= kMaxFormDegree)
    throw Error(ErrorCode::DegreeOverflow, "d_A of a 3-form would have degree 4");
  return i_A(A, d(a)) - d(i_A(A, a));
}

KForm insert_both(const OperatorField& A, const KForm& two_form) {
  require_same_chart(A.chart(), two_form.chart(), "insert_both");
  return KForm::from_matrix(A.matrix().transpose() * two_form.matrix() * A.matrix());
}

}  // namespace nijkit

namespace nijkit {

namespace {

void check_change(const Chart& old_chart, std::span<const ScalarField> forward, std::span<const ScalarField> inverse) {
  if (forward.size() != old_chart.size() || inverse.size() != old_chart.size())
    throw Error(ErrorCode::ShapeMismatch, "coordinate change has the wrong number of functions");
  for (const auto& f : forward) require_same_chart(f.chart(), old_chart, "coordinate change");
}

}  // namespace

OperatorField change_coordinates(const OperatorField& L, std::span<const ScalarField> forward,
                                 std::span<const ScalarField> inverse) {
  check_change(L.chart(), forward, inverse);
  ScalarMatrix K = jacobian(forward);
  ScalarMatrix m = K * L.matrix() * K.inverse();
  return OperatorField(m.substitute(inverse));
}

KForm change_coordinates(const KForm& two_form, std::span<const ScalarField> forward,
                         std::span<const ScalarField> inverse) {
  if (two_form.degree() != 2) throw Error(ErrorCode::InvalidArgument, "change_coordinates expects a 2-form");
  check_change(two_form.chart(), forward, inverse);
  ScalarMatrix Ki = jacobian(forward).inverse();
  ScalarMatrix m = Ki.transpose() * two_form.matrix() * Ki;
  return KForm::from_matrix(m.substitute(inverse));
}

}  // namespace nijkit
