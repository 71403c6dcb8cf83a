#include "laxscatter/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "laxscatter/hardy.hpp"
#include "laxscatter/inner.hpp"
#include "laxscatter/laguerre.hpp"
#include "laxscatter/oracles.hpp"
#include "laxscatter/pipeline.hpp"
#include "laxscatter/shift_calculus.hpp"

namespace laxscatter {
namespace {

constexpr std::uint64_t kSeed = 20240917;

CheckResult below(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured < threshold, measured, threshold, std::move(detail)};
}

CheckResult exactly_zero(std::string name, double measured, std::string detail = {}) {
  return {std::move(name), measured == 0.0, measured, 0.0, std::move(detail)};
}

UpperInner random_inner(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.2, 3.0), alpha(0.0, 2.0),
      mass(0.1, 1.0), phase(-3.14, 3.14);
  std::uniform_int_distribution<int> zero_count(0, 4), atom_count(0, 2);
  std::vector<cplx> zeros(static_cast<std::size_t>(zero_count(rng)));
  for (cplx& z : zeros) z = {re(rng), im(rng)};
  std::vector<SingularAtom> atoms(static_cast<std::size_t>(atom_count(rng)));
  for (auto& a : atoms) a = {re(rng), mass(rng)};
  return UpperInner(std::move(zeros), alpha(rng), std::move(atoms), std::polar(1.0, phase(rng)));
}

CheckResult two_path(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(-3.0, -0.1);
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const UpperInner psi = random_inner(rng);
    std::vector<cplx> grid(25);
    for (cplx& z : grid) z = {re(rng), im(rng)};
    worst = std::max(worst, ratio_two_path_check(psi, grid));
  }
  return below("psi-ratio two-path identity", worst, 1e-11, "40 random psi x 25 points");
}

CheckResult dss(std::mt19937_64& rng, double perturbation) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double worst = 0.0;
  for (int m = 0; m <= 8; ++m) {
    LaguerreExpansion e{std::vector<double>(static_cast<std::size_t>(m) + 1)};
    for (double& a : e.alphas) a = coeff(rng);
    if (e.alphas.back() == 0.0) e.alphas.back() = 1.0;
    const BoundaryPoly gamma = to_disk_gamma(e);
    DssDecomposition d = dss_decompose(gamma);
    if (perturbation != 0.0) {
      auto b = d.g.coeffs();
      b.front() += perturbation;
      d.g = BoundaryPoly(std::move(b));
    }
    worst = std::max(worst, dss_reconstruction_residual(gamma, d, 256));
  }
  return below("DSS reconstruction", worst, 1e-12, "degrees 0..8, 256 boundary points");
}

CheckResult laguerre(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double worst = 0.0;
  for (int m = 0; m <= 8; ++m) {
    PotentialSpec p{std::vector<double>(static_cast<std::size_t>(m) + 1), 0};
    for (double& c : p.poly_coeffs) c = coeff(rng);
    const LaguerreExpansion e = expand_potential(p);
    for (int n = 0; n <= m; ++n) {
      worst = std::max(worst, std::abs(e.alphas[static_cast<std::size_t>(n)] -
                                       oracle::laguerre_coefficient(p, n)));
    }
  }
  return below("Laguerre quadrature oracle", worst, 1e-8, "degrees 0..8");
}

std::vector<CheckResult> toeplitz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.0, 0.5), angle(0.0, 6.283185307179586);
  double worst = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<cplx> zeros;
    for (int j = 0; j <= trial; ++j) {
      const cplx a = std::polar(radius(rng), angle(rng));
      zeros.push_back(cplx{0.0, 1.0} * (1.0 + a) / (1.0 - a));
    }
    const auto t = toeplitz_of(disk_symbol_of(UpperInner::blaschke(zeros), 256));
    worst = std::max(worst, isometry_defect(t, 64));
  }
  DiskSymbol half{std::vector<cplx>(256, cplx{0.0, 0.0}), std::nullopt, 0.0};
  half.taylor_coeffs[0] = 0.5;
  const double control = isometry_defect(toeplitz_of(half), 64);

  const int order = 256;
  const Eigen::MatrixXcd expected =
      cplx{0.0, -0.5} * (Eigen::MatrixXcd::Identity(order, order) - shift_matrix(order));
  const double resolvent = (toeplitz_of(resolvent_symbol(order)).matrix - expected).cwiseAbs().maxCoeff();

  return {below("Toeplitz isometry (inner symbols)", worst, 1e-8, "order 256, margin 64"),
          below("Toeplitz isometry negative control", std::abs(control - 0.5), 1e-10,
                fmt::format("defect {} for the constant 1/2", control)),
          exactly_zero("resolvent symbol identity", resolvent, "order 256")};
}

CheckResult decay() {
  double worst = 0.0;
  for (int m = 0; m <= 6; ++m) {
    const auto k = compressed_shift({}, m + 1);
    const Eigen::VectorXcd gamma = Eigen::VectorXcd::Ones(m + 1).normalized();
    worst = std::max(worst, decay_check(k, gamma, m + 1).back());
  }
  const cplx half[] = {cplx{0.5, 0.0}};
  const auto k = compressed_shift(half, 0);
  const auto norms = decay_check(k, Eigen::VectorXcd::Ones(1), 40);
  for (std::size_t n = 0; n < norms.size(); ++n) {
    worst = std::max(worst, std::abs(norms[n] - std::pow(0.5, static_cast<double>(n + 1))));
  }
  return below("compressed-shift decay", worst, 1e-12, "nilpotent z^(m+1) and a = 0.5");
}

CheckResult translation() {
  int failures = 0;
  for (int size : {16, 17, 64, 255, 1024}) {
    if (!translation_model_check(size, size).all()) ++failures;
  }
  return exactly_zero("translation-model axioms", failures, "grid sizes 16, 17, 64, 255, 1024");
}

CheckResult cayley() {
  double worst = 0.0;
  for (int j = 1; j < 1000; ++j) {
    const double theta = 2.0 * 3.141592653589793 * j / 1000.0;
    worst = std::max(worst, std::abs(cayley_angle(cayley_boundary(theta)) - theta));
  }
  return below("Cayley boundary round trip", worst, 1e-12, "999 interior angles");
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& options) {
  std::mt19937_64 rng(kSeed);
  std::vector<CheckResult> out;
  out.push_back(two_path(rng));
  out.push_back(dss(rng, options.dss_perturbation));
  out.push_back(laguerre(rng));
  for (auto& r : toeplitz(rng)) out.push_back(std::move(r));
  out.push_back(decay());
  out.push_back(translation());
  out.push_back(cayley());
  return out;
}

}  // namespace laxscatter
