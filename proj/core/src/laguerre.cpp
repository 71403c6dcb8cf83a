#include "laxscatter/laguerre.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "laxscatter/errors.hpp"

namespace laxscatter {

int PotentialSpec::degree() const noexcept {
  int m = static_cast<int>(poly_coeffs.size()) - 1;
  while (m >= 0 && poly_coeffs[static_cast<std::size_t>(m)] == 0.0) --m;
  return m;
}

double PotentialSpec::operator()(double x) const {
  double acc = 0.0;
  for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) acc = acc * x + *it;
  return std::exp(-x) * acc;
}

double LaguerreExpansion::operator()(double x) const {
  double sum = 0.0;
  for (std::size_t n = 0; n < alphas.size(); ++n) {
    sum += alphas[n] * laguerre_q(static_cast<int>(n), 2.0 * x);
  }
  return sum;
}

double laguerre_q(int n, double x) {
  if (x < 0.0) throw DomainError(fmt::format("laguerre_q: x = {} < 0", x));
  if (n < 0) throw DomainError("laguerre_q: negative index");
  double prev = 1.0;  // L_0
  if (n == 0) return std::exp(-0.5 * x);
  double cur = 1.0 - x;  // L_1
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return std::exp(-0.5 * x) * cur;
}

LaguerreExpansion expand_potential(const PotentialSpec& p) {
  if (p.angular_k != 0) {
    throw UnsupportedAngularMomentumError(fmt::format(
        "expand_potential: angular momentum k = {} needs a Hankel transform; only k = 0 is "
        "supported",
        p.angular_k));
  }
  const int m = p.degree();
  if (m < 0) throw DegenerateInputError("expand_potential: zero polynomial");

  // Coefficient of x^k in L_n(2x) is (-2)^k C(n, k) / k!; the change of basis
  // is upper triangular, solved from the top degree down.
  const auto size = static_cast<std::size_t>(m) + 1;
  std::vector<std::vector<double>> basis(size, std::vector<double>(size, 0.0));
  for (std::size_t n = 0; n < size; ++n) {
    double binom = 1.0;
    double power_over_fact = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      basis[k][n] = binom * power_over_fact;
      binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
      power_over_fact = power_over_fact * -2.0 / static_cast<double>(k + 1);
    }
  }
  std::vector<double> alphas(size, 0.0);
  for (std::size_t k = size; k-- > 0;) {
    double rhs = p.poly_coeffs[k];
    for (std::size_t n = k + 1; n < size; ++n) rhs -= basis[k][n] * alphas[n];
    alphas[k] = rhs / basis[k][k];
  }
  return {std::move(alphas)};
}

BoundaryPoly to_disk_gamma(const LaguerreExpansion& e) {
  const cplx scale{0.0, 1.0 / std::numbers::sqrt2};
  std::vector<cplx> a(e.alphas.size());
  for (std::size_t n = 0; n < a.size(); ++n) a[n] = scale * e.alphas[n];
  return BoundaryPoly(std::move(a));
}

double cayley_boundary(double theta) {
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    throw DomainError(fmt::format("cayley_boundary: theta = {} outside (0, 2 pi)", theta));
  }
  const double half = 0.5 * theta;
  return -std::cos(half) / std::sin(half);
}

double cayley_angle(double delta) {
  if (!std::isfinite(delta)) throw DomainError("cayley_angle: delta must be finite");
  return 2.0 * std::atan2(1.0, -delta);
}

}  // namespace laxscatter
