#pragma once

// End-to-end scattering data for L u = -u'' + f (u, f) on the half-line:
//
//   potential f  ->  associated inner function psi0 = ((d - i)/(d + i))^{m+1}
//   psi1 = psi0 * psi  ->  Psi = psi(-z)/psi(z)  ->  S_V = Psi * S
//
// The base scattering matrix S is either the identity (L = B*B) or supplied
// as boundary samples; its singularities are an input, never computed here.

#include <string>
#include <variant>
#include <vector>

#include "laxscatter/hardy.hpp"
#include "laxscatter/inner.hpp"
#include "laxscatter/laguerre.hpp"

namespace laxscatter {

struct IdentityBaseline {};

// Boundary samples of a scalar S(delta), linearly interpolated.
class SampledBaseline {
 public:
  struct Sample {
    double delta;
    cplx value;
  };

  // Samples are sorted by delta; at least two distinct deltas are required.
  SampledBaseline(std::vector<Sample> samples, std::vector<cplx> singularities = {});

  const std::vector<Sample>& samples() const noexcept { return samples_; }
  const std::vector<cplx>& singularities() const noexcept { return singularities_; }

  // Throws InterpolationError outside [first delta, last delta].
  cplx operator()(double delta) const;

 private:
  std::vector<Sample> samples_;
  std::vector<cplx> singularities_;
};

using BaseMatrix = std::variant<IdentityBaseline, SampledBaseline>;

struct BoundaryGrid {
  double delta_min = -10.0;
  double delta_max = 10.0;
  int count = 201;

  std::vector<double> points() const;
};

// Rectangle in the lower half-plane sampled for the two-path Psi check.
struct LowerBox {
  double re_min = -3.0;
  double re_max = 3.0;
  double im_min = -3.0;
  double im_max = -0.1;
  int re_count = 7;
  int im_count = 5;

  std::vector<cplx> points() const;
};

struct ScatteringSpec {
  PotentialSpec potential;
  UpperInner psi0;
  UpperInner psi_extra;
  BaseMatrix base = IdentityBaseline{};
  BoundaryGrid grid;
  LowerBox box;
};

struct Psi0Trace {
  LaguerreExpansion expansion;
  BoundaryPoly gamma;
  DssDecomposition dss;
  double dss_residual = 0.0;
};

struct BoundarySample {
  double delta;
  cplx value;
};

struct DecayEvidence {
  int dim = 0;
  double spectral_radius = 0.0;
  int predicted_steps = 0;
  std::vector<double> norms;  // ||K^n gamma||, n = 1..
};

struct TranslationReport {
  bool axiom_i = false;         // right shifts keep D+, left shifts keep D-
  bool axiom_ii = false;        // window energy of a shifted D+ element reaches 0
  bool axiom_iv = false;        // D+ orthogonal to D-
  bool axiom_v = false;         // reflection maps D- onto D+
  bool translation_law = false; // shifts compose additively on D+

  bool all() const noexcept {
    return axiom_i && axiom_ii && axiom_iv && axiom_v && translation_law;
  }
};

struct ScatteringReport {
  Psi0Trace psi0_trace;
  UpperInner psi0;
  UpperInner psi1;
  std::vector<cplx> singularities_base;
  std::vector<cplx> singularities_new;
  std::vector<cplx> singularities_modified;
  std::vector<double> boundary_singularities;
  std::vector<BoundarySample> boundary_samples;
  double two_path_deviation = 0.0;
  DecayEvidence decay_evidence;
  std::vector<std::string> notes;
};

// Throws UnsupportedAngularMomentumError / DegenerateInputError.
UpperInner derive_psi0(const PotentialSpec& p);
UpperInner derive_psi0(const PotentialSpec& p, Psi0Trace& trace);

ScatteringSpec make_spec(PotentialSpec potential, UpperInner psi_extra, BaseMatrix base = {},
                         BoundaryGrid grid = {}, LowerBox box = {});

// Alternative entry: psi1 is divided by the derived psi0 (DivisibilityError if
// it does not divide).
ScatteringSpec make_spec_from_psi1(PotentialSpec potential, const UpperInner& psi1,
                                   BaseMatrix base = {}, BoundaryGrid grid = {},
                                   LowerBox box = {});

// psi(-delta)/psi(delta) * S(delta) with psi = psi_extra.
cplx modified_matrix_boundary(const ScatteringSpec& spec, double delta);

ScatteringReport full_report(const ScatteringSpec& spec);

// Discrete translation model on grid_size cells (>= 16), exact integer arithmetic.
TranslationReport translation_model_check(int grid_size, int shift_steps);

}  // namespace laxscatter
