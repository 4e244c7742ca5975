#include "nijkit.h"

#include <cstdlib>
#include <string>

#include "nijkit/app.hpp"
#include "nijkit/error.hpp"
#include "nijkit/parser.hpp"
#include "nijkit/random.hpp"

using nijkit::app::Report;
using nijkit::app::Status;

struct nk_report {
  nk_status status;
  std::string text;
  std::string json;
};

struct nk_scalar {
  nijkit::ScalarField f;
  std::string text;
};

namespace {

constexpr std::uint64_t kDefaultSeed = 20240229;

thread_local std::string last_error;

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : nijkit::app::preset_catalog()) v.push_back(p.name);
    return v;
  }();
  return names;
}

nk_status emit(Report r, nk_report** out) {
  const auto st = static_cast<nk_status>(r.status);
  if (out) *out = new nk_report{st, std::move(r.text), r.data.dump(2) + "\n"};
  return st;
}

template <class F>
nk_status with_json(const char* verb, const char* text, nk_report** out, F&& run) {
  return emit(nijkit::app::guarded(verb, [&] {
                if (!text) throw nijkit::Error(nijkit::ErrorCode::InvalidArgument, "null input");
                return run(nijkit::io::json::parse(text));
              }),
              out);
}

nk_status scalar_result(nijkit::ScalarField f, nk_scalar** out) {
  if (!out) return NK_INPUT_ERROR;
  std::string t = nijkit::to_string(f);
  *out = new nk_scalar{std::move(f), std::move(t)};
  return NK_OK;
}

template <class F>
nk_status scalar_call(F&& body) {
  try {
    return body();
  } catch (const nijkit::Error& e) {
    last_error = e.what();
    return nijkit::is_input_error(e.code()) ? NK_INPUT_ERROR : NK_CHECK_FAILED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NK_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* nk_version(void) { return "1.0.0"; }

uint64_t nk_default_seed(void) { return nijkit::seed_from_env(kDefaultSeed); }

nk_status nk_torsion(const char* j, nk_report** out) {
  return with_json("torsion", j, out, [](const auto& in) { return nijkit::app::torsion(in); });
}

nk_status nk_certify_pair(const char* j, nk_report** out) {
  return with_json("certify-pair", j, out, [](const auto& in) { return nijkit::app::certify_pair(in); });
}

nk_status nk_canonical(int n, int certify, nk_report** out) {
  return emit(nijkit::app::canonical(n < 0 ? 0 : static_cast<std::size_t>(n), certify != 0), out);
}

nk_status nk_turiel(const char* j, nk_report** out) {
  return with_json("turiel", j, out, [](const auto& in) { return nijkit::app::turiel(in); });
}

nk_status nk_companion_convert(int n, nk_report** out) {
  return emit(nijkit::app::companion_convert(n < 0 ? 0 : static_cast<std::size_t>(n)), out);
}

nk_status nk_solve_diagonal(const char* j, nk_report** out) {
  return with_json("solve-diagonal", j, out, [](const auto& in) { return nijkit::app::solve_diagonal(in); });
}

nk_status nk_solve_canonical(const char* j, nk_report** out) {
  return with_json("solve-canonical", j, out, [](const auto& in) { return nijkit::app::solve_canonical(in); });
}

nk_status nk_diagnostics(const char* j, nk_report** out) {
  return with_json("diagnostics", j, out, [](const auto& in) { return nijkit::app::diagnostics(in); });
}

nk_status nk_preset_list(nk_report** out) {
  Report r;
  r.data = nijkit::io::json::array();
  for (const auto& p : nijkit::app::preset_catalog()) {
    r.data.push_back({{"name", p.name}, {"description", p.description}});
    r.text += p.name + "\n    " + p.description + "\n";
  }
  return emit(std::move(r), out);
}

size_t nk_preset_count(void) { return preset_names().size(); }

const char* nk_preset_name(size_t index) {
  const auto& names = preset_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

nk_status nk_preset_run(const char* name, uint64_t seed, nk_report** out) {
  return emit(nijkit::app::run_preset(name ? name : "", seed), out);
}

nk_status nk_report_status(const nk_report* r) { return r ? r->status : NK_INPUT_ERROR; }
const char* nk_report_text(const nk_report* r) { return r ? r->text.c_str() : ""; }
const char* nk_report_json(const nk_report* r) { return r ? r->json.c_str() : ""; }
void nk_report_free(nk_report* r) { delete r; }

nk_status nk_scalar_parse(const char* const* names, size_t count, const char* expr, nk_scalar** out) {
  return scalar_call([&] {
    if (!expr || (count && !names)) throw nijkit::Error(nijkit::ErrorCode::InvalidArgument, "null argument");
    std::vector<std::string> v;
    for (size_t i = 0; i < count; ++i) v.emplace_back(names[i]);
    return scalar_result(nijkit::parse_scalar(expr, nijkit::Chart(v)), out);
  });
}

nk_status nk_scalar_partial(const nk_scalar* f, const char* coordinate, nk_scalar** out) {
  return scalar_call([&] {
    if (!f || !coordinate) throw nijkit::Error(nijkit::ErrorCode::InvalidArgument, "null argument");
    return scalar_result(f->f.partial(f->f.chart().coord(coordinate)), out);
  });
}

nk_status nk_scalar_mul(const nk_scalar* a, const nk_scalar* b, nk_scalar** out) {
  return scalar_call([&] {
    if (!a || !b) throw nijkit::Error(nijkit::ErrorCode::InvalidArgument, "null argument");
    return scalar_result(a->f * b->f, out);
  });
}

int nk_scalar_equal(const nk_scalar* a, const nk_scalar* b) {
  if (!a || !b) return 0;
  try {
    return a->f == b->f ? 1 : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

const char* nk_scalar_text(const nk_scalar* f) { return f ? f->text.c_str() : ""; }
void nk_scalar_free(nk_scalar* f) { delete f; }
const char* nk_last_error(void) { return last_error.c_str(); }

}  // extern "C"
