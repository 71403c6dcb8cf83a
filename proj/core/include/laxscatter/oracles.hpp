#pragma once

// Independent reference computations used to validate the library. None of
// these share code paths with the routines they check.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "laxscatter/laguerre.hpp"

namespace laxscatter::oracle {

using cplx = std::complex<double>;

// alpha_n = 2 * integral_0^inf f(x) q_n(2x) dx by adaptive exp-sinh
// quadrature, with L_n from Boost.Math rather than the library recurrence.
double laguerre_coefficient(const PotentialSpec& p, int n);

// Numerical rank of a complex matrix from its singular values.
int svd_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-12);

// The k-th Takenaka-Malmquist function for the zero sequence w:
// sqrt(1 - |w_k|^2)/(1 - conj(w_k) z) * prod_{j<k} (z - w_j)/(1 - conj(w_j) z).
cplx takenaka(const std::vector<cplx>& w, int k, cplx z);

// <z e_k, e_j> by trapezoidal quadrature on `nodes` points of the unit circle.
Eigen::MatrixXcd compressed_shift_by_quadrature(const std::vector<cplx>& w, int nodes = 4096);

}  // namespace laxscatter::oracle
