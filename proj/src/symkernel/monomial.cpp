#include "nijkit/monomial.hpp"

#include <algorithm>
#include <limits>

#include "nijkit/error.hpp"

namespace nijkit {

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw Error(ErrorCode::InvalidArgument, "too many variables");
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max())
    throw Error(ErrorCode::DegreeOverflow, "exponent too large");
  deg_ = deg_ - e_[i] + e;
  e_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    unsigned e = unsigned(e_[i]) + o.e_[i];
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw Error(ErrorCode::DegreeOverflow, "exponent too large");
    r.e_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r(o);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
  r.deg_ = o.deg_ - deg_;
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, std::min(e_[i], o.e_[i]));
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

int grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

}  // namespace nijkit
