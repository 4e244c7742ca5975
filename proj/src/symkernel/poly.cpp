#include "nijkit/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "nijkit/error.hpp"

namespace nijkit {

namespace {

void sort_desc(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
}

// Collects terms with a hash map and returns them sorted with zeros removed.
class Accumulator {
 public:
  void add(const Monomial& m, const Rational& c) {
    auto [it, inserted] = map_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  void add_product(const Monomial& m, const Rational& a, const Rational& b) {
    auto [it, inserted] = map_.try_emplace(m);
    if (inserted)
      mpq_mul(it->second.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    else {
      mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      it->second += tmp_;
    }
  }
  std::vector<Term> take() {
    std::vector<Term> out;
    out.reserve(map_.size());
    for (auto& [m, c] : map_)
      if (c != 0) out.push_back(Term{m, std::move(c)});
    sort_desc(out);
    return out;
  }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> map_;
  Rational tmp_;
};

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m(nvars);
  m.set(i, 1);
  return term(m, Rational(1));
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.size());
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) {
    if (t.mono.size() != nvars) throw Error(ErrorCode::InvalidArgument, "exponent vector length mismatch");
    acc.add(t.mono, t.coef);
  }
  Poly p(nvars);
  p.terms_ = acc.take();
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Rational(0);
}

unsigned Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned Poly::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool Poly::depends_on(std::size_t var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] > 0; });
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_);
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::ChartMismatch, "polynomial variable count mismatch");
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    int c = grlex_compare(i->mono, j->mono);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      Rational s = i->coef + j->coef;
      if (s != 0) r.terms_.push_back(Term{i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, o.terms_.end());
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::ChartMismatch, "polynomial variable count mismatch");
  if (is_zero() || o.is_zero()) return Poly(nvars_);
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].mono, terms_[0].coef);
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].mono, o.terms_[0].coef);
  Accumulator acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.add_product(a.mono * b.mono, a.coef, b.coef);
  Poly r(nvars_);
  r.terms_ = acc.take();
  return r;
}

Poly Poly::mul_truncated(const Poly& o, unsigned max_degree) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::ChartMismatch, "polynomial variable count mismatch");
  Accumulator acc;
  for (const auto& a : terms_) {
    if (a.mono.degree() > max_degree) continue;
    for (auto it = o.terms_.rbegin(); it != o.terms_.rend(); ++it) {
      // reverse order visits increasing degree, so we can stop early
      if (a.mono.degree() + it->mono.degree() > max_degree) break;
      acc.add_product(a.mono * it->mono, a.coef, it->coef);
    }
  }
  Poly r(nvars_);
  r.terms_ = acc.take();
  return r;
}

Poly Poly::truncated(unsigned max_degree) const {
  Poly r(nvars_);
  for (const auto& t : terms_)
    if (t.mono.degree() <= max_degree) r.terms_.push_back(t);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves grlex order
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coef * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::partial(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back(Term{m, t.coef * e});
  }
  Poly r(nvars_);
  r.terms_ = std::move(out);
  sort_desc(r.terms_);
  return r;
}

Poly Poly::integrate(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = t.mono[var] + 1;
    m.set(var, e);
    out.push_back(Term{m, t.coef / e});
  }
  Poly r(nvars_);
  r.terms_ = std::move(out);
  sort_desc(r.terms_);
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "point dimension mismatch");
  Rational sum(0);
  Rational term;
  mpz_class pw;
  for (const auto& t : terms_) {
    term = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      p.canonicalize();
      term *= p;
    }
    sum += term;
  }
  return sum;
}

Poly Poly::coeff_in(std::size_t var, unsigned d) const {
  Poly r(nvars_);
  for (const auto& t : terms_) {
    if (t.mono[var] != d) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    r.terms_.push_back(Term{m, t.coef});
  }
  sort_desc(r.terms_);
  return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "substitution arity mismatch");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw Error(ErrorCode::ChartMismatch, "substitution images on different rings");
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coef);
    for (std::size_t i = 0; i < nvars_ && !term.is_zero(); ++i)
      if (t.mono[i]) term = term * power(i, t.mono[i]);
    result += term;
  }
  return result;
}

Poly Poly::remap(std::size_t target_nvars, std::span<const std::size_t> target_index) const {
  if (target_index.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "remap arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target_nvars);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i]) m.set(target_index[i], m[target_index[i]] + t.mono[i]);
    out.push_back(Term{m, t.coef});
  }
  return from_terms(target_nvars, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / terms_.front().coef);
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly(a.nvars());
  if (b.is_constant()) return a * Rational(1 / b.leading().coef);
  if (b.size() == 1) {
    const Term& lb = b.leading();
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lb.mono.divides(t.mono)) return std::nullopt;
      out.push_back(Term{lb.mono.quotient_of(t.mono), t.coef / lb.coef});
    }
    return Poly::from_terms(a.nvars(), std::move(out));
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  // A single divisor is a Groebner basis of its ideal, so the division
  // remainder vanishes iff b | a. We abort as soon as the leading term of
  // the running remainder is not divisible.
  const Term& lb = b.leading();
  Poly rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial q = lb.mono.quotient_of(lr.mono);
    Rational c = lr.coef / lb.coef;
    quotient.push_back(Term{q, c});
    rem -= b.mul_monomial(q, c);
  }
  return Poly::from_terms(a.nvars(), std::move(quotient));
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += rational_to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += rational_to_string(c) + "*" + mono;
  }
  return out;
}

}  // namespace nijkit
