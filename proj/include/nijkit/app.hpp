#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nijkit/io.hpp"

namespace nijkit::app {

using io::json;

enum class Status { Ok = 0, CheckFailed = 1, InputError = 2, Internal = 3 };

/// Every verb produces both a human report and a JSON report.
struct Report {
  Status status = Status::Ok;
  std::string text;
  json data = json::object();
};

Report torsion(const json& input);
Report certify_pair(const json& input);
Report canonical(std::size_t n, bool certify);
Report turiel(const json& input);
Report companion_convert(std::size_t n);
Report solve_diagonal(const json& input);
Report solve_canonical(const json& input);
Report diagnostics(const json& input);

struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> preset_catalog();
/// Unknown names are an input error.
Report run_preset(const std::string& name, std::uint64_t seed);

/// Error report for an exception caught at the boundary.
Report error_report(const std::string& verb, const std::exception& e);

/// Runs `body`, converting any escaping exception into a classified report.
template <class F>
Report guarded(const std::string& verb, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return error_report(verb, e);
  }
}

}  // namespace nijkit::app
