#pragma once

// Functional calculus psi(B) = phi(T) in shift coordinates.
//
// Under lambda = (delta - i)/(delta + i) a bounded analytic psi on the upper
// half-plane becomes phi(lambda) = psi(i (1 + lambda)/(1 - lambda)) on the
// disk, and psi(B) acts on Laguerre coefficients as the lower-triangular
// Toeplitz matrix of the Taylor coefficients of phi. All identities are
// checked on leading blocks of finite truncations.

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "laxscatter/inner.hpp"

namespace laxscatter {

struct DiskSymbol {
  std::vector<cplx> taylor_coeffs;   // c_0 .. c_{n-1}
  std::optional<UpperInner> source;  // set when sampled from an inner function
  double tail_bound = 0.0;           // bound on the coefficient error from truncation

  int order() const noexcept { return static_cast<int>(taylor_coeffs.size()); }
  double parseval_sum() const;       // sum |c_k|^2
};

struct ToeplitzTruncation {
  Eigen::MatrixXcd matrix;  // (j, k) = c_{j-k} for j >= k, 0 above the diagonal

  int order() const noexcept { return static_cast<int>(matrix.rows()); }
};

// Taylor coefficients of f on the disk from samples on the circle of radius
// 1 - 1/(4 order), with radius compensation. order must be a power of two >= 8.
DiskSymbol disk_symbol_sampled(const std::function<cplx(cplx)>& f, int order);

// phi(lambda) = psi(i (1 + lambda)/(1 - lambda)). Throws SamplingError if a
// sample lands within kEssentialExclusion of a singular atom.
DiskSymbol disk_symbol_of(const UpperInner& psi, int order);

// Exact symbol of 1/(delta + i), namely (1 - lambda)/(2i), padded to `order`.
DiskSymbol resolvent_symbol(int order);

// Truncated Cauchy product of two symbols of the same order.
DiskSymbol multiply_symbols(const DiskSymbol& a, const DiskSymbol& b);

ToeplitzTruncation toeplitz_of(const DiskSymbol& s);

// The truncated unilateral shift (ones on the first subdiagonal).
Eigen::MatrixXcd shift_matrix(int order);

// Over the first (order - interior_margin) columns: max | ||col|| - 1 | plus
// the largest |<col_j, col_k>|, j != k.
double isometry_defect(const ToeplitzTruncation& t, int interior_margin);

// max |(S M - M S)_{jk}| over the leading (order - 1) block.
double commutation_defect(const ToeplitzTruncation& t);

}  // namespace laxscatter
