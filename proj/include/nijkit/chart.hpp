#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nijkit {

inline constexpr std::size_t kMaxVars = 32;

struct Coord {
  std::string name;
  std::size_t index = 0;
};

/// An ordered list of distinct coordinate names. Cheap to copy; charts with
/// equal name lists compare equal.
class Chart {
 public:
  Chart();
  explicit Chart(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  bool empty() const noexcept { return names_->empty(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Coord coord(std::size_t i) const { return Coord{name(i), i}; }
  /// Looks up a coordinate by name; throws UnknownIdentifier.
  Coord coord(std::string_view name) const;

  /// New chart consisting of this chart's names followed by `extra`.
  Chart extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws ChartMismatch unless the charts agree.
void require_same_chart(const Chart& a, const Chart& b, const char* what);

bool is_identifier(std::string_view s);

}  // namespace nijkit
