#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "laxscatter/pipeline.hpp"

namespace laxscatter::app {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kNumericError = 3,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { kJson, kJsonCsv };

struct JobConfig {
  PotentialSpec potential;
  UpperInner inner;        // psi_extra, or psi1 when from_psi1
  bool from_psi1 = false;
  BaseMatrix base = IdentityBaseline{};
  BoundaryGrid grid;
  LowerBox box;
  std::filesystem::path output_dir = "laxscatter-out";  // relative to the config file
  ReportFormat format = ReportFormat::kJsonCsv;
};

// Parses and validates a job file; throws ConfigError for anything malformed.
// Relative baseline CSV paths resolve against the config file's directory.
JobConfig load_job_config(const std::filesystem::path& path);

// Derives psi0 and, for a psi1 entry, divides it out. Library errors propagate.
ScatteringSpec build_spec(const JobConfig& config);

// Writes report.json, singularities.json and (json+csv) boundary.csv.
int run_job(const std::filesystem::path& config_path,
            const std::optional<std::filesystem::path>& output_override, std::ostream& out,
            std::ostream& err);

int run_selfcheck(bool verbose, double dss_perturbation, std::ostream& out);

}  // namespace laxscatter::app
