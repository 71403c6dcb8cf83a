#include "laxscatter/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "laxscatter/errors.hpp"

namespace laxscatter {

BoundaryPoly::BoundaryPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == cplx{0.0, 0.0}) coeffs_.pop_back();
}

cplx BoundaryPoly::operator()(cplx z) const {
  cplx acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double BoundaryPoly::h2_norm() const {
  double sum = 0.0;
  for (cplx a : coeffs_) sum += std::norm(a);
  return std::sqrt(sum);
}

BoundaryPoly backward_shift(const BoundaryPoly& p) {
  if (p.is_zero()) return p;
  return BoundaryPoly(std::vector<cplx>(p.coeffs().begin() + 1, p.coeffs().end()));
}

int noncyclic_span_dim(const BoundaryPoly& p) {
  if (p.is_zero()) throw DegenerateInputError("noncyclic_span_dim: zero polynomial");
  // Each iterate drops the degree by exactly one and keeps the leading
  // coefficient, so the nonzero iterates are triangular and independent.
  int dim = 0;
  for (BoundaryPoly q = p; !q.is_zero(); q = backward_shift(q)) ++dim;
  return dim;
}

DssDecomposition dss_decompose(const BoundaryPoly& gamma) {
  if (gamma.is_zero()) throw DegenerateInputError("dss_decompose: zero polynomial");
  const auto& a = gamma.coeffs();
  const std::size_t m = a.size() - 1;
  std::vector<cplx> b(m + 1);
  for (std::size_t k = 0; k <= m; ++k) b[k] = std::conj(a[m - k]);
  return {BoundaryPoly(std::move(b)), static_cast<int>(m) + 1};
}

double dss_reconstruction_residual(const BoundaryPoly& gamma, const DssDecomposition& dss,
                                   std::size_t points) {
  double worst = 0.0;
  for (std::size_t j = 0; j < points; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points);
    const cplx zeta = std::polar(1.0, theta);
    const cplx rebuilt = std::conj(zeta * dss.g(zeta)) * std::polar(1.0, dss.phi_power * theta);
    worst = std::max(worst, std::abs(rebuilt - gamma(zeta)));
  }
  return worst;
}

int model_space_dim(int phi_power) {
  if (phi_power < 1) throw DomainError("model_space_dim: phi_power must be >= 1");
  return phi_power;
}

CompressedShiftMatrix compressed_shift(std::span<const cplx> disk_zeros, int phi_power) {
  if (phi_power < 0) throw DomainError("compressed_shift: negative power of z");
  for (cplx a : disk_zeros) {
    if (!(std::abs(a) < 1.0)) {
      throw ZeroOnBoundaryError(
          fmt::format("compressed_shift: zero ({}, {}) is not inside the unit disk", a.real(),
                      a.imag()));
    }
  }
  std::vector<cplx> w(static_cast<std::size_t>(phi_power), cplx{0.0, 0.0});
  w.insert(w.end(), disk_zeros.begin(), disk_zeros.end());
  const auto d = static_cast<Eigen::Index>(w.size());
  if (d == 0) throw DomainError("compressed_shift: the model space is trivial");

  std::vector<double> scale(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) scale[j] = std::sqrt(1.0 - std::norm(w[j]));

  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    k(col, col) = w[col];
    cplx chain{1.0, 0.0};
    for (Eigen::Index row = col + 1; row < d; ++row) {
      k(row, col) = scale[row] * scale[col] * chain;
      chain *= -std::conj(w[row]);
    }
  }
  return {std::move(k), std::move(w),
          fmt::format("takenaka-malmquist(z^{} * {} disk factors)", phi_power, disk_zeros.size())};
}

double spectral_radius(const CompressedShiftMatrix& k) {
  return k.entries.diagonal().cwiseAbs().maxCoeff();
}

std::vector<double> decay_check(const CompressedShiftMatrix& k, const Eigen::VectorXcd& gamma,
                                int n_max) {
  if (gamma.size() != k.dim()) throw std::invalid_argument("decay_check: dimension mismatch");
  if (std::abs(gamma.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("decay_check: gamma must have unit norm");
  }
  if (n_max < 1) throw std::invalid_argument("decay_check: n_max must be >= 1");
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(n_max));
  Eigen::VectorXcd v = gamma;
  for (int n = 1; n <= n_max; ++n) {
    v = k.entries.triangularView<Eigen::Lower>() * v;
    norms.push_back(v.norm());
  }
  return norms;
}

namespace {

struct DecayParts {
  double rho;
  double nu;
  Eigen::Index dim;
};

DecayParts decay_parts(const CompressedShiftMatrix& k) {
  Eigen::MatrixXcd strict = k.entries.triangularView<Eigen::StrictlyLower>();
  return {spectral_radius(k), strict.operatorNorm(), k.dim()};
}

double decay_bound(const DecayParts& parts, int n) {
  double bound = 0.0;
  for (Eigen::Index j = 0; j < parts.dim && j <= n; ++j) {
    const int rest = n - static_cast<int>(j);
    if (rest > 0 && parts.rho == 0.0) continue;
    if (j > 0 && parts.nu == 0.0) continue;
    double log_term = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(rest + 1.0);
    if (rest > 0) log_term += rest * std::log(parts.rho);
    if (j > 0) log_term += static_cast<double>(j) * std::log(parts.nu);
    bound += std::exp(log_term);
  }
  return bound;
}

}  // namespace

double decay_bound(const CompressedShiftMatrix& k, int n) {
  if (n < 0) throw std::invalid_argument("decay_bound: negative power");
  return decay_bound(decay_parts(k), n);
}

int predicted_decay_steps(const CompressedShiftMatrix& k, double tol) {
  constexpr int kLimit = 10'000'000;
  const DecayParts parts = decay_parts(k);
  if (parts.rho >= 1.0) throw DomainError("predicted_decay_steps: spectral radius >= 1");
  for (int n = 1; n <= kLimit; ++n) {
    if (decay_bound(parts, n) < tol) return n;
  }
  throw DomainError("predicted_decay_steps: decay too slow to predict");
}

}  // namespace laxscatter
