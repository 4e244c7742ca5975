#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "nijkit/chart.hpp"

namespace nijkit {

/// Exponent vector of fixed capacity kMaxVars.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);

  std::size_t size() const noexcept { return n_; }
  unsigned degree() const noexcept { return deg_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const noexcept { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  /// Precondition: divides(o) from this side, i.e. o / *this.
  Monomial quotient_of(const Monomial& o) const;
  /// Componentwise minimum.
  Monomial gcd(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

/// Graded lexicographic comparison with x_0 > x_1 > ...; returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grlex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace nijkit
