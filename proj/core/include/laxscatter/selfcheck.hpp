#pragma once

#include <string>
#include <vector>

namespace laxscatter {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct SelfcheckOptions {
  // Added to the first coefficient of g before the DSS reconstruction check;
  // nonzero values exist to demonstrate that the suite catches corruption.
  double dss_perturbation = 0.0;
};

// Runs the invariant suite with a fixed seed: two-path Psi identity, DSS
// reconstruction, Laguerre quadrature oracle, Toeplitz isometry, resolvent
// symbol, decay check and translation-model axioms.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& options = {});

}  // namespace laxscatter
