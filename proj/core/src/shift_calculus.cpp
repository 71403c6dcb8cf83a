#include "laxscatter/shift_calculus.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>
#include <fmt/format.h>

#include "laxscatter/errors.hpp"

namespace laxscatter {
namespace {

constexpr cplx kI{0.0, 1.0};

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// FFTW planning is not thread-safe; execution with new-array execute is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<cplx> forward_dft(std::vector<cplx> in) {
  const int n = static_cast<int>(in.size());
  std::vector<cplx> out(in.size());
  auto* src = reinterpret_cast<fftw_complex*>(in.data());
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, src, dst, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

double DiskSymbol::parseval_sum() const {
  double sum = 0.0;
  for (cplx c : taylor_coeffs) sum += std::norm(c);
  return sum;
}

DiskSymbol disk_symbol_sampled(const std::function<cplx(cplx)>& f, int order) {
  if (order < 8 || !is_power_of_two(order)) {
    throw DomainError(fmt::format("disk_symbol: order {} is not a power of two >= 8", order));
  }
  const double n = order;
  const double r = 1.0 - 1.0 / (4.0 * n);
  std::vector<cplx> samples(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) {
    samples[static_cast<std::size_t>(j)] = f(std::polar(r, 2.0 * std::numbers::pi * j / n));
  }
  std::vector<cplx> coeffs = forward_dft(std::move(samples));
  double inv_rk = 1.0 / n;
  for (cplx& c : coeffs) {
    c *= inv_rk;
    inv_rk /= r;
  }
  return {std::move(coeffs), std::nullopt, 2.0 * std::pow(r, n) / (1.0 - r)};
}

DiskSymbol disk_symbol_of(const UpperInner& psi, int order) {
  DiskSymbol s = disk_symbol_sampled(
      [&psi](cplx lambda) {
        const cplx delta = kI * (1.0 + lambda) / (1.0 - lambda);
        for (const auto& atom : psi.singular_atoms()) {
          if (std::abs(delta - atom.point) < kEssentialExclusion) {
            throw SamplingError(fmt::format(
                "disk_symbol_of: sample maps within {} of the atom at {}", kEssentialExclusion,
                atom.point));
          }
        }
        return eval_inner(psi, delta);
      },
      order);
  s.source = psi;
  return s;
}

DiskSymbol resolvent_symbol(int order) {
  if (order < 2) throw DomainError("resolvent_symbol: order must be >= 2");
  std::vector<cplx> c(static_cast<std::size_t>(order), cplx{0.0, 0.0});
  c[0] = cplx{0.0, -0.5};
  c[1] = cplx{0.0, 0.5};
  return {std::move(c), std::nullopt, 0.0};
}

DiskSymbol multiply_symbols(const DiskSymbol& a, const DiskSymbol& b) {
  if (a.order() != b.order()) throw std::invalid_argument("multiply_symbols: order mismatch");
  const auto n = a.taylor_coeffs.size();
  std::vector<cplx> c(n, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k <= j; ++k) c[j] += a.taylor_coeffs[k] * b.taylor_coeffs[j - k];
  }
  std::optional<UpperInner> source;
  if (a.source && b.source) source = mul_inner(*a.source, *b.source);
  return {std::move(c), std::move(source), a.tail_bound + b.tail_bound};
}

ToeplitzTruncation toeplitz_of(const DiskSymbol& s) {
  const Eigen::Index n = s.order();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = k; j < n; ++j) m(j, k) = s.taylor_coeffs[static_cast<std::size_t>(j - k)];
  }
  return {std::move(m)};
}

Eigen::MatrixXcd shift_matrix(int order) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(order, order);
  for (int j = 1; j < order; ++j) s(j, j - 1) = 1.0;
  return s;
}

double isometry_defect(const ToeplitzTruncation& t, int interior_margin) {
  if (interior_margin < 0 || interior_margin >= t.order()) {
    throw std::invalid_argument("isometry_defect: margin must lie in [0, order)");
  }
  const Eigen::Index kept = t.order() - interior_margin;
  const Eigen::MatrixXcd gram = t.matrix.leftCols(kept).adjoint() * t.matrix.leftCols(kept);
  double norm_defect = 0.0;
  double cross = 0.0;
  for (Eigen::Index k = 0; k < kept; ++k) {
    norm_defect = std::max(norm_defect, std::abs(std::sqrt(gram(k, k).real()) - 1.0));
    for (Eigen::Index j = 0; j < kept; ++j) {
      if (j != k) cross = std::max(cross, std::abs(gram(j, k)));
    }
  }
  return norm_defect + cross;
}

double commutation_defect(const ToeplitzTruncation& t) {
  const int n = t.order();
  if (n < 2) return 0.0;
  const Eigen::MatrixXcd s = shift_matrix(n);
  const Eigen::MatrixXcd diff = s * t.matrix - t.matrix * s;
  return diff.topLeftCorner(n - 1, n - 1).cwiseAbs().maxCoeff();
}

}  // namespace laxscatter
