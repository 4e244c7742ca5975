#pragma once

#include <string>
#include <vector>

#include "nijkit/forms.hpp"
#include "nijkit/matrix.hpp"
#include "nijkit/parser.hpp"
#include "nijkit/scalar.hpp"

namespace testing_support {

inline nijkit::Chart chart(std::initializer_list<const char*> names) {
  std::vector<std::string> v;
  for (auto n : names) v.emplace_back(n);
  return nijkit::Chart(v);
}

inline nijkit::Chart numbered_chart(const std::string& stem, std::size_t n, const std::string& stem2 = "",
                                    std::size_t n2 = 0) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  for (std::size_t i = 1; i <= n2; ++i) v.push_back(stem2 + std::to_string(i));
  return nijkit::Chart(v);
}

inline nijkit::ScalarField S(const nijkit::Chart& c, const std::string& expr) {
  return nijkit::parse_scalar(expr, c);
}

inline nijkit::OperatorField op(const nijkit::Chart& c, const std::vector<std::vector<std::string>>& rows) {
  return nijkit::OperatorField(nijkit::ScalarMatrix::parse(c, rows));
}

// The canonical pair matrix typed in entry by entry from the block pattern:
// A has -x_i in column 0 and ones above the diagonal; S has -p_j in row 0,
// p_i in column 0; lower right block is A transposed.
inline nijkit::OperatorField canonical_by_hand(std::size_t n) {
  auto c = numbered_chart("x", n, "p", n);
  std::vector<std::vector<std::string>> rows(2 * n, std::vector<std::string>(2 * n, "0"));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][0] = "-x" + std::to_string(i + 1);
    if (i + 1 < n) rows[i][i + 1] = "1";
    rows[n][n + i] = "-x" + std::to_string(i + 1);
    if (i + 1 < n) rows[n + i + 1][n + i] = "1";
  }
  for (std::size_t j = 1; j < n; ++j) {
    rows[n][j] = "-p" + std::to_string(j + 1);
    rows[n + j][0] = "p" + std::to_string(j + 1);
  }
  return op(c, rows);
}

}  // namespace testing_support
