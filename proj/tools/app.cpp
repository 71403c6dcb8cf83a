#include "app.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "laxscatter/errors.hpp"
#include "laxscatter/selfcheck.hpp"
#include "laxscatter/serialize.hpp"

namespace laxscatter::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(fmt::format("missing required field '{}'", key));
  return j[key];
}

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(fmt::format("'{}' must be a number", key));
  return j[key].get<double>();
}

int integer(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw ConfigError(fmt::format("'{}' must be an integer", key));
  return j[key].get<int>();
}

BoundaryGrid parse_grid(const json& j) {
  if (!j.is_object()) throw ConfigError("'grid' must be an object");
  BoundaryGrid g;
  g.delta_min = number(j, "delta_min", g.delta_min);
  g.delta_max = number(j, "delta_max", g.delta_max);
  g.count = integer(j, "count", g.count);
  if (g.count < 2) throw ConfigError("grid.count must be >= 2");
  if (!(g.delta_min < g.delta_max)) throw ConfigError("grid.delta_min must be < grid.delta_max");
  return g;
}

LowerBox parse_box(const json& j) {
  if (!j.is_object()) throw ConfigError("'lower_box' must be an object");
  LowerBox b;
  b.re_min = number(j, "re_min", b.re_min);
  b.re_max = number(j, "re_max", b.re_max);
  b.im_min = number(j, "im_min", b.im_min);
  b.im_max = number(j, "im_max", b.im_max);
  b.re_count = integer(j, "re_count", b.re_count);
  b.im_count = integer(j, "im_count", b.im_count);
  try {
    (void)b.points();
  } catch (const InvariantError& e) {
    throw ConfigError(e.what());
  }
  return b;
}

BaseMatrix parse_base(const json& j, const fs::path& config_dir,
                      std::vector<cplx> singularities) {
  if (!j.is_string()) throw ConfigError("'base' must be \"identity\" or a CSV path");
  const auto value = j.get<std::string>();
  if (value == "identity") {
    if (!singularities.empty()) {
      throw ConfigError("base_singularities require an external base matrix");
    }
    return IdentityBaseline{};
  }
  fs::path csv = value;
  if (csv.is_relative()) csv = config_dir / csv;
  std::ifstream in(csv);
  if (!in) throw ConfigError(fmt::format("cannot open base samples '{}'", csv.string()));
  return read_baseline_csv(in, std::move(singularities));
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
  out << content;
  if (!out) throw ConfigError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace

JobConfig load_job_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path.string()));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("malformed JSON in '{}': {}", path.string(), e.what()));
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  JobConfig cfg;
  try {
    cfg.potential = potential_from_json(require(j, "potential"));
    if (j.contains("psi_extra") && j.contains("psi1")) {
      throw ConfigError("give either 'psi_extra' or 'psi1', not both");
    }
    if (j.contains("psi1")) {
      cfg.inner = upper_inner_from_json(j["psi1"]);
      cfg.from_psi1 = true;
    } else if (j.contains("psi_extra")) {
      cfg.inner = upper_inner_from_json(j["psi_extra"]);
    }

    std::vector<cplx> base_sing;
    if (j.contains("base_singularities")) {
      const json& list = j["base_singularities"];
      if (!list.is_array()) throw ConfigError("'base_singularities' must be an array");
      for (const auto& z : list) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          throw ConfigError("base_singularities entries must be [re, im]");
        }
        base_sing.emplace_back(z[0].get<double>(), z[1].get<double>());
      }
    }
    if (j.contains("base")) {
      cfg.base = parse_base(j["base"], path.parent_path(), std::move(base_sing));
    } else if (!base_sing.empty()) {
      throw ConfigError("base_singularities require an external base matrix");
    }
    if (j.contains("grid")) cfg.grid = parse_grid(j["grid"]);
    if (j.contains("lower_box")) cfg.box = parse_box(j["lower_box"]);
    if (j.contains("output_dir")) {
      if (!j["output_dir"].is_string()) throw ConfigError("'output_dir' must be a string");
      cfg.output_dir = j["output_dir"].get<std::string>();
    }
    if (cfg.output_dir.is_relative()) cfg.output_dir = path.parent_path() / cfg.output_dir;
    if (j.contains("report_format")) {
      const json& f = j["report_format"];
      if (f == "json") {
        cfg.format = ReportFormat::kJson;
      } else if (f == "json+csv") {
        cfg.format = ReportFormat::kJsonCsv;
      } else {
        throw ConfigError("report_format must be \"json\" or \"json+csv\"");
      }
    }
  } catch (const FormatError& e) {
    throw ConfigError(e.what());
  } catch (const InvariantError& e) {
    throw ConfigError(e.what());
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ScatteringSpec build_spec(const JobConfig& config) {
  if (config.from_psi1) {
    return make_spec_from_psi1(config.potential, config.inner, config.base, config.grid, config.box);
  }
  return make_spec(config.potential, config.inner, config.base, config.grid, config.box);
}

int run_job(const fs::path& config_path, const std::optional<fs::path>& output_override,
            std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  try {
    cfg = load_job_config(config_path);
    if (output_override) cfg.output_dir = *output_override;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  spdlog::info("config '{}' loaded, output to '{}'", config_path.string(), cfg.output_dir.string());

  ScatteringReport report;
  try {
    const ScatteringSpec spec = build_spec(cfg);
    spdlog::debug("psi0 has {} zeros at i", spec.psi0.blaschke_zeros().size());
    report = full_report(spec);
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  }

  try {
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) {
      throw ConfigError(fmt::format("cannot create output directory '{}': {}",
                                    cfg.output_dir.string(), ec.message()));
    }
    write_file(cfg.output_dir / "report.json", to_json(report).dump(2) + "\n");
    write_file(cfg.output_dir / "singularities.json", singularities_json(report).dump(2) + "\n");
    if (cfg.format == ReportFormat::kJsonCsv) {
      write_file(cfg.output_dir / "boundary.csv", boundary_csv(report));
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  out << fmt::format("psi0: {} Blaschke zero(s) at i (associated inner function z^{})\n",
                     report.psi0.blaschke_zeros().size(), report.psi0_trace.dss.phi_power);
  out << fmt::format("singularities: {} base, {} new, {} total; {} boundary essential point(s)\n",
                     report.singularities_base.size(), report.singularities_new.size(),
                     report.singularities_modified.size(), report.boundary_singularities.size());
  out << fmt::format("two-path Psi deviation: {:.3e}\n", report.two_path_deviation);
  if (!report.decay_evidence.norms.empty()) {
    out << fmt::format("decay: dim {}, ||K^n gamma|| = {:.3e} at n = {}\n",
                       report.decay_evidence.dim, report.decay_evidence.norms.back(),
                       report.decay_evidence.predicted_steps);
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  return kOk;
}

int run_selfcheck(bool verbose, double dss_perturbation, std::ostream& out) {
  const auto results = laxscatter::run_selfcheck({dss_perturbation});
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << fmt::format("{:<40} {}", r.name, r.passed ? "PASS" : "FAIL");
    if (verbose || !r.passed) {
      out << fmt::format("  measured {:.3e} (threshold {:.1e}){}", r.measured, r.threshold,
                         r.detail.empty() ? "" : "  [" + r.detail + "]");
    }
    out << '\n';
  }
  out << (all ? "selfcheck: all checks passed\n" : "selfcheck: FAILED\n");
  return all ? kOk : kCheckFailed;
}

}  // namespace laxscatter::app
