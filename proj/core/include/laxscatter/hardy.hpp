#pragma once

// Backward-shift machinery in H^2 of the unit disk.
//
// A polynomial gamma of degree m is non-cyclic for the backward shift: its
// orbit spans the polynomials of degree <= m, which is the model space
// K_{z^{m+1}}. The decomposition
//
//   gamma(e^{it}) = conj(e^{it} g(e^{it})) * e^{i(m+1)t},   g_k = conj(gamma_{m-k})
//
// recovers the associated inner function z^{m+1}.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace laxscatter {

using cplx = std::complex<double>;

class BoundaryPoly {
 public:
  BoundaryPoly() = default;
  // Trailing exact zeros are trimmed; an all-zero input is the zero polynomial.
  explicit BoundaryPoly(std::vector<cplx> coeffs);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  cplx operator()(cplx z) const;  // Horner
  double h2_norm() const;

  friend bool operator==(const BoundaryPoly&, const BoundaryPoly&) = default;

 private:
  std::vector<cplx> coeffs_;
};

struct DssDecomposition {
  BoundaryPoly g;
  int phi_power = 1;  // associated inner function z^phi_power
};

struct CompressedShiftMatrix {
  Eigen::MatrixXcd entries;
  std::vector<cplx> basis_zeros;  // zero sequence generating the basis, in order
  std::string basis_tag;

  Eigen::Index dim() const noexcept { return entries.rows(); }
};

BoundaryPoly backward_shift(const BoundaryPoly& p);

// dim span{ (T*)^n p : n >= 0 }. Throws DegenerateInputError for p == 0.
int noncyclic_span_dim(const BoundaryPoly& p);

// Throws DegenerateInputError for gamma == 0.
DssDecomposition dss_decompose(const BoundaryPoly& gamma);

// max over `points` uniform boundary nodes of |conj(e^{it} g) e^{i k t} - gamma|.
double dss_reconstruction_residual(const BoundaryPoly& gamma, const DssDecomposition& dss,
                                   std::size_t points = 256);

// dim K_{z^k} = k.
int model_space_dim(int phi_power);

// Compression of multiplication by z to K_phi, phi = z^phi_power * prod b_a,
// in the Takenaka-Malmquist basis built from the zero sequence
// (0 repeated phi_power times, then disk_zeros). Lower triangular with the
// zero sequence on the diagonal. Throws ZeroOnBoundaryError if |a| >= 1.
CompressedShiftMatrix compressed_shift(std::span<const cplx> disk_zeros, int phi_power);

double spectral_radius(const CompressedShiftMatrix& k);

// (||K^n gamma||) for n = 1..n_max. gamma must have unit norm.
std::vector<double> decay_check(const CompressedShiftMatrix& k, const Eigen::VectorXcd& gamma,
                                int n_max);

// Upper bound on ||K^n||: K = D + N with N strictly lower triangular, and any
// product containing dim() factors of N vanishes, so
//   ||K^n|| <= sum_{j<d} C(n, j) rho^{n-j} ||N||^j.
double decay_bound(const CompressedShiftMatrix& k, int n);

// Smallest n with decay_bound(k, n) < tol.
int predicted_decay_steps(const CompressedShiftMatrix& k, double tol);

}  // namespace laxscatter
