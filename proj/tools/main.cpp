#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "app.hpp"

namespace {

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("laxscatter");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::err);
  if (const char* level = std::getenv("LAXSCATTER_LOG")) {
    const std::string value = level;
    if (value == "debug") {
      spdlog::set_level(spdlog::level::debug);
    } else if (value == "info") {
      spdlog::set_level(spdlog::level::info);
    } else if (value != "error") {
      spdlog::warn("ignoring LAXSCATTER_LOG={}; expected error, info or debug", value);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();

  CLI::App app{"Lax-Phillips scattering data for rank-one nonlocal potentials"};
  app.require_subcommand(1);

  std::string output_dir;
  long long seed = 0;
  app.add_option("--output-dir", output_dir, "Override the config's output directory");
  app.add_option("--seed", seed, "Reserved; every computation is deterministic");

  auto* run = app.add_subcommand("run", "Run the scattering pipeline on a job config");
  std::string config_path;
  run->add_option("config", config_path, "Job config (JSON)")->required();
  run->fallthrough();

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in invariant suite");
  bool verbose = false;
  double inject = 0.0;
  selfcheck->add_flag("--verbose,-v", verbose, "List measured values for every check");
  selfcheck->add_option("--inject-dss-perturbation", inject,
                        "Perturb the DSS factor g to exercise a failing check")
      ->group("");
  selfcheck->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return laxscatter::app::kConfigError;
  }

  if (*run) {
    std::optional<std::filesystem::path> override_dir;
    if (!output_dir.empty()) override_dir = output_dir;
    return laxscatter::app::run_job(config_path, override_dir, std::cout, std::cerr);
  }
  return laxscatter::app::run_selfcheck(verbose, inject, std::cout);
}
