#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "laxscatter/errors.hpp"
#include "laxscatter/pipeline.hpp"
#include "test_random.hpp"

namespace laxscatter {
namespace {

using namespace std::complex_literals;
using testing::make_rng;
using testing::random_inner;
using testing::uniform;
using testing::uniform_int;

std::vector<cplx> sorted(std::vector<cplx> v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

bool multiset_includes(std::vector<cplx> big, std::vector<cplx> small) {
  big = sorted(std::move(big));
  small = sorted(std::move(small));
  auto less = [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); };
  return std::includes(big.begin(), big.end(), small.begin(), small.end(), less);
}

SampledBaseline unimodular_baseline() {
  std::vector<SampledBaseline::Sample> s;
  for (int j = 0; j <= 400; ++j) {
    const double d = -20.0 + 0.1 * j;
    s.push_back({d, std::polar(1.0, 0.3 * d)});
  }
  return SampledBaseline(std::move(s), {-0.5 - 2.0i});
}

TEST(DerivePsi0, Examples) {
  EXPECT_EQ(derive_psi0({{1.0}, 0}), UpperInner::blaschke({1.0i}));
  EXPECT_EQ(derive_psi0({{0.0, 0.0, 0.0, 1.0}, 0}), UpperInner::blaschke({1.0i, 1.0i, 1.0i, 1.0i}));
}

TEST(DerivePsi0, PropertyDegreeLaw) {
  auto rng = make_rng(41);
  for (int m = 0; m <= 10; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      PotentialSpec p;
      for (int j = 0; j <= m; ++j) p.poly_coeffs.push_back(uniform(rng, -2.0, 2.0));
      Psi0Trace trace;
      const auto psi0 = derive_psi0(p, trace);
      ASSERT_EQ(psi0.blaschke_zeros().size(), static_cast<std::size_t>(m + 1));
      for (cplx z : psi0.blaschke_zeros()) EXPECT_EQ(z, 1.0i);
      EXPECT_EQ(psi0.exp_alpha(), 0.0);
      EXPECT_TRUE(psi0.singular_atoms().empty());
      // rounding scales with the coefficient size, which grows like m!/2^m
      double scale = 1.0;
      for (double a : trace.expansion.alphas) scale += std::abs(a);
      EXPECT_LT(trace.dss_residual, 1e-12 * scale);
    }
  }
}

TEST(DerivePsi0, ErrorsPropagate) {
  EXPECT_THROW(derive_psi0({{1.0}, 1}), UnsupportedAngularMomentumError);
  EXPECT_THROW(derive_psi0({{0.0}, 0}), DegenerateInputError);
}

TEST(MakeSpec, FromPsi1DividesOutPsi0) {
  const auto spec = make_spec_from_psi1({{0.0, 1.0}, 0}, UpperInner::blaschke({1.0i, 1.0i, 1.0 + 1.0i}));
  EXPECT_EQ(spec.psi_extra.blaschke_zeros(), (std::vector<cplx>{1.0 + 1.0i}));
  EXPECT_THROW(make_spec_from_psi1({{0.0, 1.0}, 0}, UpperInner::blaschke({1.0i})), DivisibilityError);
}

TEST(ModifiedMatrixBoundary, TrivialPsiGivesIdentity) {
  const auto spec = make_spec({{1.0}, 0}, UpperInner{});
  for (double d : BoundaryGrid{}.points()) EXPECT_EQ(modified_matrix_boundary(spec, d), 1.0);
}

TEST(ModifiedMatrixBoundary, ExponentialGivesPhase) {
  const auto spec = make_spec({{1.0}, 0}, UpperInner::exponential(1.0));
  for (double d : BoundaryGrid{}.points()) {
    EXPECT_LT(std::abs(modified_matrix_boundary(spec, d) - std::exp(-2.0i * d)), 1e-12);
  }
}

TEST(ModifiedMatrixBoundary, ZeroAtIAtOrigin) {
  const auto spec = make_spec({{1.0}, 0}, UpperInner::blaschke({1.0i}));
  EXPECT_LT(std::abs(modified_matrix_boundary(spec, 0.0) - 1.0), 1e-15);
}

TEST(ModifiedMatrixBoundary, Errors) {
  const auto atoms = make_spec({{1.0}, 0}, UpperInner::singular({{0.5, 1.0}}));
  EXPECT_THROW(modified_matrix_boundary(atoms, 0.5), DomainError);
  EXPECT_THROW(modified_matrix_boundary(atoms, -0.5), DomainError);
  const auto sampled = make_spec({{1.0}, 0}, UpperInner{}, unimodular_baseline());
  EXPECT_THROW(modified_matrix_boundary(sampled, 25.0), InterpolationError);
  EXPECT_NO_THROW(modified_matrix_boundary(sampled, 20.0));
}

TEST(SampledBaseline, InterpolatesLinearly) {
  const SampledBaseline b({{1.0, 2.0}, {0.0, 1.0i}});
  EXPECT_EQ(b(0.0), 1.0i);
  EXPECT_EQ(b(1.0), 2.0);
  EXPECT_LT(std::abs(b(0.25) - (0.5 + 0.75i)), 1e-15);
  EXPECT_THROW(b(-0.01), InterpolationError);
}

TEST(SampledBaseline, ValidatesInput) {
  EXPECT_THROW(SampledBaseline({{0.0, 1.0}}), InvariantError);
  EXPECT_THROW(SampledBaseline({{0.0, 1.0}, {0.0, 2.0}}), InvariantError);
  EXPECT_THROW(SampledBaseline({{0.0, 1.0}, {1.0, 1.0}}, {0.5i}), InvariantError);
}

TEST(Grids, Points) {
  const auto p = BoundaryGrid{-1.0, 1.0, 5}.points();
  EXPECT_EQ(p, (std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
  EXPECT_THROW((BoundaryGrid{1.0, 1.0, 5}.points()), InvariantError);
  EXPECT_THROW((BoundaryGrid{0.0, 1.0, 1}.points()), InvariantError);
  EXPECT_EQ(LowerBox{}.points().size(), 35u);
  LowerBox bad;
  bad.im_max = 0.0;
  EXPECT_THROW(bad.points(), InvariantError);
}

TEST(FullReport, OffAxisZero) {
  const auto r = full_report(make_spec({{1.0}, 0}, UpperInner::blaschke({1.0 + 1.0i})));
  EXPECT_EQ(sorted(r.singularities_modified), sorted({-1.0 - 1.0i, 1.0 - 1.0i}));
  EXPECT_TRUE(r.singularities_base.empty());
  EXPECT_EQ(r.psi0, UpperInner::blaschke({1.0i}));
  EXPECT_EQ(r.psi1, UpperInner::blaschke({1.0i, 1.0 + 1.0i}));
  EXPECT_LT(r.two_path_deviation, 1e-11);
}

TEST(FullReport, TrivialPsiHasNoSingularities) {
  const auto r = full_report(make_spec({{0.0, 1.0}, 0}, UpperInner{}));
  EXPECT_TRUE(r.singularities_modified.empty());
  EXPECT_EQ(r.decay_evidence.dim, 0);
  EXPECT_EQ(r.psi0_trace.dss.phi_power, 2);
}

TEST(FullReport, CoincidingReflections) {
  const auto r = full_report(make_spec({{1.0}, 0}, UpperInner::blaschke({1.0i, 2.0i})));
  EXPECT_EQ(sorted(r.singularities_modified), sorted({-1.0i, -1.0i, -2.0i, -2.0i}));
}

TEST(FullReport, BaseSingularitiesCarriedThrough) {
  const auto r = full_report(make_spec({{1.0}, 0}, UpperInner::blaschke({2.0i}), unimodular_baseline(),
                                       BoundaryGrid{-5.0, 5.0, 51}));
  EXPECT_EQ(r.singularities_base, (std::vector<cplx>{-0.5 - 2.0i}));
  EXPECT_EQ(sorted(r.singularities_modified), sorted({-0.5 - 2.0i, -2.0i, -2.0i}));
}

TEST(FullReport, FailuresNameTheStage) {
  const auto spec = make_spec({{1.0}, 0}, UpperInner{}, unimodular_baseline(), BoundaryGrid{-30.0, 30.0, 11});
  try {
    full_report(spec);
    FAIL() << "expected PipelineError";
  } catch (const PipelineError& e) {
    EXPECT_EQ(e.stage(), "full_report");
  }
}

TEST(FullReport, PropertyBaselineIdentityWithTrivialPsi) {
  const auto base = unimodular_baseline();
  const auto r = full_report(make_spec({{1.0, 2.0}, 0}, UpperInner{}, base));
  for (const auto& s : r.boundary_samples) EXPECT_EQ(s.value, base(s.delta));
  const auto id = full_report(make_spec({{1.0, 2.0}, 0}, UpperInner{}));
  for (const auto& s : id.boundary_samples) EXPECT_EQ(s.value, 1.0);
}

TEST(FullReport, PropertyUnimodularityTransport) {
  auto rng = make_rng(42);
  const auto base = unimodular_baseline();
  for (int trial = 0; trial < 30; ++trial) {
    const auto psi = random_inner(rng, 4, 0);
    const auto r = full_report(make_spec({{1.0}, 0}, psi, base));
    for (const auto& s : r.boundary_samples) {
      EXPECT_LT(std::abs(std::abs(s.value) - std::abs(base(s.delta))), 1e-10);
    }
  }
}

TEST(FullReport, PropertySingularitiesMonotone) {
  auto rng = make_rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_inner(rng);
    const auto b = random_inner(rng);
    const auto ra = full_report(make_spec({{1.0}, 0}, a, {}, BoundaryGrid{-1.0, 1.0, 3}));
    const auto rab = full_report(make_spec({{1.0}, 0}, mul_inner(a, b), {}, BoundaryGrid{-1.0, 1.0, 3}));
    EXPECT_TRUE(multiset_includes(rab.singularities_modified, ra.singularities_modified));
  }
}

TEST(FullReport, PropertyDecayWithinPredictedSteps) {
  auto rng = make_rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const auto psi = random_inner(rng, 5, 0);
    const auto r = full_report(make_spec({{1.0}, 0}, psi, {}, BoundaryGrid{-1.0, 1.0, 3}));
    const auto& ev = r.decay_evidence;
    if (psi.blaschke_zeros().empty()) {
      EXPECT_EQ(ev.dim, 0);
      continue;
    }
    EXPECT_EQ(ev.dim, static_cast<int>(psi.blaschke_zeros().size()));
    ASSERT_EQ(ev.norms.size(), static_cast<std::size_t>(ev.predicted_steps));
    EXPECT_LT(ev.norms.back(), 1e-8);
  }
}

TEST(TranslationModel, AllAxiomsHold) {
  for (int n : {16, 17, 31, 64, 100, 255, 1024}) {
    const auto r = translation_model_check(n, 3);
    EXPECT_TRUE(r.axiom_i) << n;
    EXPECT_TRUE(r.axiom_ii) << n;
    EXPECT_TRUE(r.axiom_iv) << n;
    EXPECT_TRUE(r.axiom_v) << n;
    EXPECT_TRUE(r.translation_law) << n;
    EXPECT_TRUE(r.all());
  }
}

TEST(TranslationModel, Errors) {
  EXPECT_THROW(translation_model_check(15, 1), DomainError);
  EXPECT_THROW(translation_model_check(16, -1), DomainError);
}

}  // namespace
}  // namespace laxscatter
