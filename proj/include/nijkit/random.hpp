#pragma once

#include <cstdint>
#include <random>

#include "nijkit/forms.hpp"

namespace nijkit {

/// Seeded generator for randomized test data; identical seeds give
/// identical sequences on every platform (no std distributions involved).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);

  /// Sum of `terms` random monomials of total degree <= max_degree with
  /// integer coefficients in [-3, 3] (so possibly fewer terms, or zero).
  ScalarField polynomial(const Chart& chart, unsigned max_degree, int terms);
  /// Like polynomial() but only in the listed variables.
  ScalarField polynomial_in(const Chart& chart, const std::vector<std::size_t>& vars, unsigned max_degree, int terms);
  /// Square operator with polynomial entries; each entry is zero with
  /// probability about one half.
  OperatorField operator_field(const Chart& chart, unsigned max_degree);

 private:
  std::mt19937_64 eng_;
};

/// Seed from NIJKIT_SEED if set, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace nijkit
