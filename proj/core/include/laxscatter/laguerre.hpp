#pragma once

// Potentials f(x) = e^{-x} P(x) on the half-line, their expansion in the
// scaled Laguerre family q_n(2x) = e^{-x} L_n(2x), and the transport to H^2
// of the disk, under which q_n(2x) becomes (i/sqrt 2) z^n.
//
// The family q_n(2x) has norm 1/sqrt(2) in L2(0, inf); expansion
// coefficients are taken with respect to this unnormalized family, so
// alpha_n = 2 * integral f(x) q_n(2x) dx.

#include <vector>

#include "laxscatter/hardy.hpp"

namespace laxscatter {

struct PotentialSpec {
  std::vector<double> poly_coeffs;  // c_0 .. c_m of P(x) = sum c_j x^j
  int angular_k = 0;

  // Degree of P after dropping trailing zeros, -1 for P == 0.
  int degree() const noexcept;
  double operator()(double x) const;  // e^{-x} P(x)
};

struct LaguerreExpansion {
  std::vector<double> alphas;

  // sum alpha_n q_n(2x)
  double operator()(double x) const;
};

// e^{-x/2} L_n(x) by the three-term recurrence. Throws DomainError for x < 0.
double laguerre_q(int n, double x);

// Throws UnsupportedAngularMomentumError for k >= 1 and DegenerateInputError
// for the zero polynomial.
LaguerreExpansion expand_potential(const PotentialSpec& p);

// a_n = (i / sqrt 2) alpha_n.
BoundaryPoly to_disk_gamma(const LaguerreExpansion& e);

// delta = -cot(theta / 2) for theta in (0, 2 pi); throws DomainError otherwise.
double cayley_boundary(double theta);

// Inverse of cayley_boundary, with values in (0, 2 pi).
double cayley_angle(double delta);

}  // namespace laxscatter
