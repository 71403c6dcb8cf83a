#pragma once

// Inner functions on the upper half-plane and the reflected ratio
//
//   psi(z)  = c * exp(i a z) * prod (z - l)/(z - conj(l))
//               * exp(i sum_j m_j (1 + t_j z)/(t_j - z)),      Im z >= 0
//   Psi(z)  = psi(-z)/psi(z)
//           = exp(-2 i a z) * prod (z + l)/(z + conj(l)) * (z - conj(l))/(z - l)
//               * exp(-2 i z sum_j m_j (1 + t_j^2)/(t_j^2 - z^2)),  Im z <= 0
//
// Only finite Blaschke products and atomic singular measures are represented.

#include <complex>
#include <span>
#include <vector>

namespace laxscatter {

using cplx = std::complex<double>;

struct SingularAtom {
  double point;  // boundary point t on the real axis
  double mass;   // > 0

  friend bool operator==(const SingularAtom&, const SingularAtom&) = default;
};

class UpperInner {
 public:
  // The constant inner function 1.
  UpperInner() = default;

  // Throws InvariantError if a zero is not strictly in the upper half-plane,
  // alpha < 0, an atom mass is not positive, or |unimodular| != 1 (1e-14).
  UpperInner(std::vector<cplx> blaschke_zeros, double exp_alpha,
             std::vector<SingularAtom> singular_atoms,
             cplx unimodular_const = {1.0, 0.0});

  static UpperInner blaschke(std::vector<cplx> zeros) {
    return UpperInner(std::move(zeros), 0.0, {});
  }
  static UpperInner exponential(double alpha) { return UpperInner({}, alpha, {}); }
  static UpperInner singular(std::vector<SingularAtom> atoms) {
    return UpperInner({}, 0.0, std::move(atoms));
  }

  const std::vector<cplx>& blaschke_zeros() const noexcept { return zeros_; }
  double exp_alpha() const noexcept { return alpha_; }
  const std::vector<SingularAtom>& singular_atoms() const noexcept { return atoms_; }
  cplx unimodular_const() const noexcept { return const_; }

  // No zeros, no exponential part, no atoms (a unimodular constant).
  bool is_constant() const noexcept {
    return zeros_.empty() && alpha_ == 0.0 && atoms_.empty();
  }
  // Finite Blaschke product times a constant.
  bool is_finite_blaschke() const noexcept { return alpha_ == 0.0 && atoms_.empty(); }

  friend bool operator==(const UpperInner&, const UpperInner&) = default;

 private:
  std::vector<cplx> zeros_;
  double alpha_ = 0.0;
  std::vector<SingularAtom> atoms_;
  cplx const_{1.0, 0.0};
};

class RatioFunction {
 public:
  explicit RatioFunction(UpperInner source);

  const UpperInner& source() const noexcept { return source_; }
  // {-l, conj(l)} for every zero l of the source, in source order.
  const std::vector<cplx>& zeros_lower() const noexcept { return zeros_lower_; }
  // {+-t_j}, ascending, duplicates removed.
  const std::vector<double>& boundary_essential() const noexcept { return essential_; }
  double exp_alpha2() const noexcept { return 2.0 * source_.exp_alpha(); }

 private:
  UpperInner source_;
  std::vector<cplx> zeros_lower_;
  std::vector<double> essential_;
};

struct SingularitySet {
  std::vector<cplx> points;     // multiset, base points first
  std::vector<double> boundary; // essential singularities on the real axis
};

// Radius around an essential boundary point inside which Psi is not evaluated.
inline constexpr double kEssentialExclusion = 1e-6;

cplx eval_inner(const UpperInner& psi, cplx z);

UpperInner mul_inner(const UpperInner& a, const UpperInner& b);

// Quotient q with mul_inner(den, q) == num; throws DivisibilityError naming
// the first component (zeros, exponential, atoms) that does not divide.
UpperInner div_inner(const UpperInner& num, const UpperInner& den);

RatioFunction make_ratio(const UpperInner& psi);

// Closed-form Psi on the closed lower half-plane.
cplx eval_ratio(const RatioFunction& ratio, cplx z);

// psi(-z)/psi(z) assembled factor by factor from the defining formulas of psi,
// continued meromorphically to z in the lower half-plane.
cplx factorwise_ratio(const UpperInner& psi, cplx z);

// max |eval_ratio(make_ratio(psi), z) - factorwise_ratio(psi, z)| over the grid.
double ratio_two_path_check(const UpperInner& psi, std::span<const cplx> grid);

SingularitySet singularity_set(const RatioFunction& ratio, std::span<const cplx> base);

}  // namespace laxscatter
