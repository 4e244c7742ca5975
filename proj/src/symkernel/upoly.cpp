#include "nijkit/upoly.hpp"

#include <algorithm>
#include <set>

#include "nijkit/error.hpp"

namespace nijkit {

UPoly::UPoly(Chart chart, std::vector<ScalarField> coeffs) : chart_(std::move(chart)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_chart(c.chart(), chart_, "univariate polynomial");
  trim();
}

UPoly UPoly::monomial(const Chart& chart, const ScalarField& c, std::size_t degree) {
  std::vector<ScalarField> cs(degree + 1, ScalarField::zero(chart));
  cs[degree] = c;
  return UPoly(chart, std::move(cs));
}

UPoly UPoly::from_rationals(const std::vector<Rational>& coeffs) {
  Chart empty;
  std::vector<ScalarField> cs;
  for (const auto& q : coeffs) cs.emplace_back(empty, q);
  return UPoly(empty, std::move(cs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ScalarField UPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ScalarField::zero(chart_);
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  require_same_chart(chart_, o.chart_, "univariate addition");
  std::vector<ScalarField> cs(std::max(coeffs_.size(), o.coeffs_.size()), ScalarField::zero(chart_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
  return UPoly(chart_, std::move(cs));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  require_same_chart(chart_, o.chart_, "univariate multiplication");
  if (is_zero() || o.is_zero()) return UPoly(chart_);
  std::vector<ScalarField> cs(coeffs_.size() + o.coeffs_.size() - 1, ScalarField::zero(chart_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
  return UPoly(chart_, std::move(cs));
}

UPoly UPoly::operator*(const ScalarField& c) const {
  UPoly r(*this);
  for (auto& x : r.coeffs_) x = x * c;
  r.trim();
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<ScalarField> cs;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return UPoly(chart_, std::move(cs));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (ScalarField::one(chart_) / leading());
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "univariate division by zero");
  UPoly rem = *this;
  if (rem.degree() < d.degree()) return {UPoly(chart_), rem};
  std::vector<ScalarField> q(rem.degree() - d.degree() + 1, ScalarField::zero(chart_));
  ScalarField inv = ScalarField::one(chart_) / d.leading();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    std::size_t shift = rem.degree() - d.degree();
    ScalarField c = rem.leading() * inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= c * d.coeffs_[i];
    rem.coeffs_.back() = ScalarField::zero(chart_);
    rem.trim();
  }
  return {UPoly(chart_, std::move(q)), rem};
}

ScalarField UPoly::evaluate(const ScalarField& t) const {
  ScalarField acc = ScalarField::zero(chart_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.chart_ == b.chart_ && a.coeffs_ == b.coeffs_; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p_in) {
  UPoly p = p_in.monic();
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  UPoly a = gcd(p, p.derivative());
  UPoly b = p.divmod(a).first;
  UPoly c = p.derivative().divmod(a).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly ai = gcd(b, d);
    UPoly bn = b.divmod(ai).first;
    UPoly cn = d.divmod(ai).first;
    d = cn - bn.derivative();
    b = bn;
    out.push_back(ai);
  }
  while (!out.empty() && out.back().is_one()) out.pop_back();
  return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (!p.chart().empty()) throw Error(ErrorCode::InvalidArgument, "rational_roots needs constant coefficients");
  std::set<Rational> roots;
  if (p.degree() <= 0) return {};
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.constant_value());
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  if (c.size() > 1) {
    mpz_class l = 1;
    for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& q : c) ints.push_back(mpz_class(q * l));
    auto ps = positive_divisors(ints.front());
    auto qs = positive_divisors(ints.back());
    for (const auto& a : ps)
      for (const auto& b : qs)
        for (int sign : {1, -1}) {
          Rational r(a * sign, b);
          r.canonicalize();
          Rational v = 0;
          for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
          if (v == 0) roots.insert(r);
        }
  }
  return {roots.begin(), roots.end()};
}

UPoly poly_square_root(const UPoly& q) {
  if (q.is_zero() || q.degree() % 2 != 0 || !q.is_monic())
    throw Error(ErrorCode::InvalidArgument, "square root needs a monic polynomial of even degree");
  const Chart& chart = q.chart();
  const std::size_t n = static_cast<std::size_t>(q.degree()) / 2;
  // r = t^n + h_1 t^{n-1} + ... + h_n; h[0] = 1
  std::vector<ScalarField> h(n + 1, ScalarField::zero(chart));
  h[0] = ScalarField::one(chart);
  const Rational half(1, 2);
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarField s = q.coeff(2 * n - k);
    for (std::size_t i = 1; i < k; ++i) s -= h[i] * h[k - i];
    h[k] = s * half;
  }
  for (std::size_t k = n + 1; k <= 2 * n; ++k) {
    ScalarField s = ScalarField::zero(chart);
    for (std::size_t i = k - n; i <= n; ++i) s += h[i] * h[k - i];
    ScalarField expected = q.coeff(2 * n - k);
    if (s != expected)
      throw Error(ErrorCode::NotAFullSquare,
                  "coefficient of t^" + std::to_string(2 * n - k) + " is " + to_string(expected) +
                      " but the square of the matched root gives " + to_string(s));
  }
  std::vector<ScalarField> coeffs(n + 1, ScalarField::zero(chart));
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = h[k];
  return UPoly(chart, std::move(coeffs));
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const ScalarField& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool negative = false;
    bool simple = c.is_constant() || (c.is_polynomial() && c.num().size() == 1);
    if (simple && !cs.empty() && cs[0] == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      out += simple ? cs : "(" + cs + ")";
    } else if (cs == "1") {
      out += power;
    } else {
      out += (simple ? cs : "(" + cs + ")") + "*" + power;
    }
  }
  return out;
}

}  // namespace nijkit
