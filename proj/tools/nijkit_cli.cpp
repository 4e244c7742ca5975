// nijkit: command-line front end over the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "nijkit.h"

namespace {

struct Options {
  std::string in = "-";
  std::string out;
  bool json = false;
};

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream f(path);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  text = ss.str();
  return true;
}

// Prints the report and returns the exit status.
int finish(nk_status st, nk_report* r, const Options& o) {
  if (o.json)
    std::fputs(nk_report_json(r), stdout);
  else
    std::fputs(nk_report_text(r), st == NK_OK ? stdout : stderr);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::fprintf(stderr, "cannot write %s\n", o.out.c_str());
      nk_report_free(r);
      return NK_INPUT_ERROR;
    }
    f << nk_report_json(r);
  }
  nk_report_free(r);
  return static_cast<int>(st);
}

using FileVerb = nk_status (*)(const char*, nk_report**);

int run_file_verb(FileVerb verb, const Options& o) {
  std::string text;
  if (!read_input(o.in, text)) {
    std::fprintf(stderr, "cannot read %s\n", o.in.c_str());
    return NK_INPUT_ERROR;
  }
  nk_report* r = nullptr;
  const nk_status st = verb(text.c_str(), &r);
  return finish(st, r, o);
}

void io_flags(CLI::App* sub, Options& o, bool input) {
  if (input) sub->add_option("--in,-i", o.in, "input JSON file ('-' for stdin)")->required();
  sub->add_option("--out,-o", o.out, "also write the JSON report here");
  sub->add_flag("--json", o.json, "print the JSON report instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nijkit: exact computations with Nijenhuis operators and Poisson-Nijenhuis pairs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nk_version()));

  Options o;
  int n = 0;
  bool certify = false, list = false, all = false;
  std::string preset;
  std::uint64_t seed = nk_default_seed();

  struct FileCommand {
    const char* name;
    const char* help;
    FileVerb verb;
  };
  const FileCommand file_commands[] = {
      {"torsion", "Nijenhuis torsion of an operator field", nk_torsion},
      {"certify-pair", "check a symplectic form and operator for compatibility", nk_certify_pair},
      {"turiel", "cotangent extension of an operator field", nk_turiel},
      {"solve-diagonal", "solve d(A* dU) = Omega for a diagonal operator", nk_solve_diagonal},
      {"solve-canonical", "power-series solution of the canonicalization equation", nk_solve_canonical},
      {"diagnostics", "pointwise algebraic data of an operator", nk_diagnostics},
  };
  FileVerb chosen = nullptr;
  for (const auto& fc : file_commands) {
    CLI::App* sub = app.add_subcommand(fc.name, fc.help);
    io_flags(sub, o, true);
    sub->callback([&chosen, v = fc.verb] { chosen = v; });
  }

  CLI::App* canon = app.add_subcommand("canonical", "canonical pair in dimension 2n");
  canon->add_option("--n,-n", n, "half dimension")->required()->check(CLI::Range(1, 8));
  canon->add_flag("--certify", certify, "certify torsion and compatibility");
  io_flags(canon, o, false);

  CLI::App* conv = app.add_subcommand("companion-convert", "first to second companion form coordinates");
  conv->add_option("--n,-n", n, "dimension")->required()->check(CLI::Range(1, 6));
  io_flags(conv, o, false);

  CLI::App* pre = app.add_subcommand("presets", "named reproducible runs");
  auto* list_flag = pre->add_flag("--list", list, "list the presets");
  auto* run_opt = pre->add_option("--run", preset, "run one preset");
  auto* all_flag = pre->add_flag("--all", all, "run every preset");
  list_flag->excludes(run_opt)->excludes(all_flag);
  run_opt->excludes(all_flag);
  pre->add_option("--seed", seed, "seed for randomized presets (default: NIJKIT_SEED or built-in)");
  io_flags(pre, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : NK_INPUT_ERROR;
  }

  nk_report* r = nullptr;
  if (chosen) return run_file_verb(chosen, o);
  nk_status st = NK_OK;
  if (canon->parsed()) {
    st = nk_canonical(n, certify ? 1 : 0, &r);
    return finish(st, r, o);
  }
  if (conv->parsed()) {
    st = nk_companion_convert(n, &r);
    return finish(st, r, o);
  }
  if (list || (preset.empty() && !all)) {
    st = nk_preset_list(&r);
    return finish(st, r, o);
  }
  if (!all) {
    st = nk_preset_run(preset.c_str(), seed, &r);
    return finish(st, r, o);
  }

  // --all: run every preset, report each, exit with the worst status
  int worst = 0;
  std::string joined = "[\n";
  for (std::size_t i = 0; i < nk_preset_count(); ++i) {
    st = nk_preset_run(nk_preset_name(i), seed, &r);
    if (!o.json) std::fputs(nk_report_text(r), st == NK_OK ? stdout : stderr);
    joined += std::string(i ? ",\n" : "") + nk_report_json(r);
    nk_report_free(r);
    worst = std::max(worst, static_cast<int>(st));
  }
  joined += "]\n";
  if (o.json) std::fputs(joined.c_str(), stdout);
  if (!o.out.empty()) std::ofstream(o.out) << joined;
  return worst;
}
