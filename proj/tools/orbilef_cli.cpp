// orbilef command-line driver.  Talks to the library only through the C API.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orbilef/orbilef.h"

namespace {

constexpr int kIoError = ORBILEF_IO_ERROR;

struct ContextDeleter {
  void operator()(orbilef_context* c) const { orbilef_context_destroy(c); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// Inline JSON, or a path to a file holding it.
bool json_argument(const std::string& arg, std::string& out) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec))
    return read_file(arg, out);
  out = arg;
  return true;
}

int report_failure(orbilef_context* ctx, orbilef_status st) {
  std::cerr << "error: " << orbilef_last_error(ctx) << '\n';
  std::cerr << orbilef_status_name(st) << '\n';
  return int(st);
}

int finish(orbilef_context* ctx, orbilef_status st, orbilef_report* report) {
  if (st != ORBILEF_OK)
    return report_failure(ctx, st);
  std::cout << orbilef_report_text(report);
  orbilef_report_destroy(report);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbifold Lefschetz numbers for covariant pairs"};
  app.require_subcommand(1);

  std::string format = "text";
  double radius = 0, tolerance = 0;
  std::uint64_t seed = 20250101;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--radius", radius, "Override the scene's enumeration radius");
  app.add_option("--tolerance", tolerance, "Override the scene's point tolerance");
  app.add_option("--seed", seed, "Character-table seed")->capture_default_str();

  std::string scene_path;
  auto* lef = app.add_subcommand("lefschetz", "Lefschetz number of a scene");
  lef->add_option("scene", scene_path, "Scene file")->required();
  auto* grp = app.add_subcommand("group", "Group enumeration and stabilizers of a scene");
  grp->add_option("scene", scene_path, "Scene file")->required();

  std::string group, rep, intertwiner, zeta;
  auto* chr = app.add_subcommand("character", "Orientation character and its integrality");
  chr->add_option("--group", group, "Named group (C<n>, D<2m>, V4, S3, Q8, trivial)")->required();
  chr->add_option("--rep", rep, "Generator matrices as JSON, inline or a file")->required();
  chr->add_option("--intertwiner", intertwiner, "Intertwiner matrix as JSON, inline or a file")
      ->required();

  auto* bur = app.add_subcommand("burnside", "Finite-group twisted class identity");
  bur->add_option("--group", group, "Named group")->required();
  bur->add_option("--zeta", zeta, "Automorphism: id, inv, pow:k, conj:word, a=word,...")
      ->required();

  int truncation = 0;
  auto* mod = app.add_subcommand("model-index", "Index of the truncated model operator");
  mod->add_option("--truncation", truncation, "Truncation N")->required();

  // Options declared on the main app are also accepted after the subcommand.
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ORBILEF_INVALID_ARGUMENT;
  }

  std::unique_ptr<orbilef_context, ContextDeleter> holder(orbilef_context_create());
  orbilef_context* ctx = holder.get();
  if (!ctx) {
    std::cerr << "error: cannot allocate context\nInternal\n";
    return ORBILEF_INTERNAL;
  }
  orbilef_status st = ORBILEF_OK;
  if ((st = orbilef_set_seed(ctx, seed)) != ORBILEF_OK ||
      (st = orbilef_set_radius(ctx, radius)) != ORBILEF_OK ||
      (st = orbilef_set_tolerance(ctx, tolerance)) != ORBILEF_OK ||
      (st = orbilef_set_format(ctx, format == "structured" ? ORBILEF_FORMAT_STRUCTURED
                                                           : ORBILEF_FORMAT_TEXT)) != ORBILEF_OK)
    return report_failure(ctx, st);

  orbilef_report* report = nullptr;
  if (*lef || *grp) {
    std::string text;
    if (!read_file(scene_path, text)) {
      std::cerr << "error: cannot read scene file '" << scene_path << "'\n"
                << orbilef_status_name(ORBILEF_IO_ERROR) << '\n';
      return kIoError;
    }
    st = *lef ? orbilef_run_scene(ctx, text.c_str(), &report)
              : orbilef_run_group(ctx, text.c_str(), &report);
  } else if (*chr) {
    std::string rep_text, a_text;
    if (!json_argument(rep, rep_text) || !json_argument(intertwiner, a_text)) {
      std::cerr << "error: cannot read representation or intertwiner\n"
                << orbilef_status_name(ORBILEF_IO_ERROR) << '\n';
      return kIoError;
    }
    st = orbilef_run_character(ctx, group.c_str(), rep_text.c_str(), a_text.c_str(), &report);
  } else if (*bur) {
    st = orbilef_run_burnside(ctx, group.c_str(), zeta.c_str(), &report);
  } else {
    st = orbilef_run_model_index(ctx, truncation, &report);
  }
  return finish(ctx, st, report);
}
