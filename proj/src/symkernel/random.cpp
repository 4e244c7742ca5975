#include "nijkit/random.hpp"

#include <cstdlib>
#include <numeric>

#include "nijkit/error.hpp"

namespace nijkit {

long RandomSource::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

ScalarField RandomSource::polynomial_in(const Chart& chart, const std::vector<std::size_t>& vars, unsigned max_degree,
                                        int terms) {
  ScalarField f = ScalarField::zero(chart);
  for (int t = 0; t < terms; ++t) {
    ScalarField m(chart, Rational(integer(-3, 3)));
    long deg = integer(0, max_degree);
    for (long k = 0; k < deg && !vars.empty(); ++k)
      m *= ScalarField::variable(chart, vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))]);
    f += m;
  }
  return f;
}

ScalarField RandomSource::polynomial(const Chart& chart, unsigned max_degree, int terms) {
  std::vector<std::size_t> all(chart.size());
  std::iota(all.begin(), all.end(), 0);
  return polynomial_in(chart, all, max_degree, terms);
}

OperatorField RandomSource::operator_field(const Chart& chart, unsigned max_degree) {
  const std::size_t n = chart.size();
  ScalarMatrix m(chart, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (integer(0, 1)) m(i, j) = polynomial(chart, max_degree, 2);
  return OperatorField(m);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("NIJKIT_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::InvalidArgument, std::string("NIJKIT_SEED is not an integer: ") + s);
  return v;
}

}  // namespace nijkit
