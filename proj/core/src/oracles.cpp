#include "laxscatter/oracles.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/laguerre.hpp>

namespace laxscatter::oracle {

double laguerre_coefficient(const PotentialSpec& p, int n) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto integrand = [&](double x) {
    // e^{-2x} underflows long before the polynomial factors overflow.
    if (x > 360.0) return 0.0;
    double poly = 0.0;
    for (auto it = p.poly_coeffs.rbegin(); it != p.poly_coeffs.rend(); ++it) poly = poly * x + *it;
    return poly * std::exp(-2.0 * x) * boost::math::laguerre(static_cast<unsigned>(n), 2.0 * x);
  };
  return 2.0 * integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
}

int svd_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (s(j) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

cplx takenaka(const std::vector<cplx>& w, int k, cplx z) {
  const auto kk = static_cast<std::size_t>(k);
  cplx value = std::sqrt(1.0 - std::norm(w[kk])) / (1.0 - std::conj(w[kk]) * z);
  for (std::size_t j = 0; j < kk; ++j) value *= (z - w[j]) / (1.0 - std::conj(w[j]) * z);
  return value;
}

Eigen::MatrixXcd compressed_shift_by_quadrature(const std::vector<cplx>& w, int nodes) {
  const auto d = static_cast<Eigen::Index>(w.size());
  Eigen::MatrixXcd samples(nodes, d);
  Eigen::VectorXcd zeta(nodes);
  for (int j = 0; j < nodes; ++j) {
    zeta(j) = std::polar(1.0, 2.0 * std::numbers::pi * j / nodes);
    for (Eigen::Index k = 0; k < d; ++k) samples(j, k) = takenaka(w, static_cast<int>(k), zeta(j));
  }
  // (row, col) = <z e_col, e_row> = mean over nodes of z e_col conj(e_row).
  Eigen::MatrixXcd shifted = zeta.asDiagonal() * samples;
  return samples.adjoint() * shifted / static_cast<double>(nodes);
}

}  // namespace laxscatter::oracle
