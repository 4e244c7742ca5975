#include "nijkit/chart.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nijkit/error.hpp"

namespace nijkit {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Chart::Chart() : names_(std::make_shared<const std::vector<std::string>>()) {}

Chart::Chart(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw Error(ErrorCode::InvalidArgument,
                "chart has " + std::to_string(names.size()) + " coordinates, at most " +
                    std::to_string(kMaxVars) + " supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw Error(ErrorCode::InvalidArgument, "invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgument, "duplicate coordinate name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

Coord Chart::coord(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorCode::UnknownIdentifier, "unknown coordinate '" + std::string(name) + "'");
  return Coord{std::string(name), *i};
}

Chart Chart::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = *names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Chart(std::move(all));
}

void require_same_chart(const Chart& a, const Chart& b, const char* what) {
  if (!(a == b)) throw Error(ErrorCode::ChartMismatch, std::string("chart mismatch in ") + what);
}

}  // namespace nijkit
