#include "laxscatter/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <fmt/format.h>

#include "laxscatter/errors.hpp"

namespace laxscatter {
namespace {

constexpr cplx kI{0.0, 1.0};

// Psi is evaluated only this far from its own zeros in the two-path check.
constexpr double kZeroExclusion = 1e-6;

std::vector<cplx> base_singularities(const BaseMatrix& base) {
  if (const auto* sampled = std::get_if<SampledBaseline>(&base)) return sampled->singularities();
  return {};
}

cplx base_value(const BaseMatrix& base, double delta) {
  if (const auto* sampled = std::get_if<SampledBaseline>(&base)) return (*sampled)(delta);
  return {1.0, 0.0};
}

}  // namespace

SampledBaseline::SampledBaseline(std::vector<Sample> samples, std::vector<cplx> singularities)
    : samples_(std::move(samples)), singularities_(std::move(singularities)) {
  std::stable_sort(samples_.begin(), samples_.end(),
                   [](const Sample& a, const Sample& b) { return a.delta < b.delta; });
  if (samples_.size() < 2 || samples_.front().delta == samples_.back().delta) {
    throw InvariantError("SampledBaseline: need samples at two or more distinct deltas");
  }
  for (cplx s : singularities_) {
    if (!(s.imag() < 0.0)) {
      throw InvariantError("SampledBaseline: singularities must lie in the lower half-plane");
    }
  }
}

cplx SampledBaseline::operator()(double delta) const {
  if (!(delta >= samples_.front().delta && delta <= samples_.back().delta)) {
    throw InterpolationError(fmt::format("base samples cover [{}, {}] but delta = {}",
                                         samples_.front().delta, samples_.back().delta, delta));
  }
  auto hi = std::lower_bound(samples_.begin(), samples_.end(), delta,
                             [](const Sample& s, double d) { return s.delta < d; });
  if (hi->delta == delta) return hi->value;
  auto lo = std::prev(hi);
  const double w = (delta - lo->delta) / (hi->delta - lo->delta);
  return (1.0 - w) * lo->value + w * hi->value;
}

std::vector<double> BoundaryGrid::points() const {
  if (count < 2 || !(delta_min < delta_max)) {
    throw InvariantError("BoundaryGrid: need count >= 2 and delta_min < delta_max");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (delta_max - delta_min) / (count - 1);
  for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = delta_min + j * step;
  out.back() = delta_max;
  return out;
}

std::vector<cplx> LowerBox::points() const {
  if (re_count < 1 || im_count < 1 || re_min > re_max || im_min > im_max || im_max >= 0.0) {
    throw InvariantError("LowerBox: need positive counts and a box inside Im z < 0");
  }
  auto axis = [](double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n), lo);
    for (int j = 1; j < n; ++j) v[static_cast<std::size_t>(j)] = lo + (hi - lo) * j / (n - 1);
    return v;
  };
  std::vector<cplx> out;
  for (double y : axis(im_min, im_max, im_count)) {
    for (double x : axis(re_min, re_max, re_count)) out.emplace_back(x, y);
  }
  return out;
}

UpperInner derive_psi0(const PotentialSpec& p, Psi0Trace& trace) {
  trace.expansion = expand_potential(p);
  trace.gamma = to_disk_gamma(trace.expansion);
  trace.dss = dss_decompose(trace.gamma);
  trace.dss_residual = dss_reconstruction_residual(trace.gamma, trace.dss);
  // z^k on the disk lifts to ((delta - i)/(delta + i))^k: k zeros at i.
  return UpperInner::blaschke(std::vector<cplx>(static_cast<std::size_t>(trace.dss.phi_power), kI));
}

UpperInner derive_psi0(const PotentialSpec& p) {
  Psi0Trace trace;
  return derive_psi0(p, trace);
}

ScatteringSpec make_spec(PotentialSpec potential, UpperInner psi_extra, BaseMatrix base,
                         BoundaryGrid grid, LowerBox box) {
  UpperInner psi0 = derive_psi0(potential);
  return {std::move(potential), std::move(psi0), std::move(psi_extra), std::move(base), grid, box};
}

ScatteringSpec make_spec_from_psi1(PotentialSpec potential, const UpperInner& psi1,
                                   BaseMatrix base, BoundaryGrid grid, LowerBox box) {
  UpperInner psi0 = derive_psi0(potential);
  UpperInner extra = div_inner(psi1, psi0);
  return {std::move(potential), std::move(psi0), std::move(extra), std::move(base), grid, box};
}

cplx modified_matrix_boundary(const ScatteringSpec& spec, double delta) {
  const cplx ratio = eval_ratio(make_ratio(spec.psi_extra), cplx{delta, 0.0});
  return ratio * base_value(spec.base, delta);
}

namespace {

ScatteringReport assemble_report(const ScatteringSpec& spec) {
  ScatteringReport report;
  report.psi0 = derive_psi0(spec.potential, report.psi0_trace);
  if (!(report.psi0 == spec.psi0)) {
    report.notes.push_back("spec.psi0 differs from the psi0 derived from the potential; using the derived one");
  }
  report.psi1 = mul_inner(report.psi0, spec.psi_extra);

  const RatioFunction ratio = make_ratio(spec.psi_extra);
  const auto base = base_singularities(spec.base);
  const SingularitySet sing = singularity_set(ratio, base);
  report.singularities_base = base;
  report.singularities_new = ratio.zeros_lower();
  report.singularities_modified = sing.points;
  report.boundary_singularities = sing.boundary;

  for (double delta : spec.grid.points()) {
    report.boundary_samples.push_back({delta, modified_matrix_boundary(spec, delta)});
  }

  std::vector<cplx> box;
  std::size_t skipped = 0;
  for (cplx z : spec.box.points()) {
    const bool near_zero = std::any_of(ratio.zeros_lower().begin(), ratio.zeros_lower().end(),
                                       [&](cplx w) { return std::abs(z - w) < kZeroExclusion; });
    if (near_zero) {
      ++skipped;
    } else {
      box.push_back(z);
    }
  }
  if (skipped > 0) {
    report.notes.push_back(fmt::format("two-path check skipped {} box point(s) at zeros of Psi", skipped));
  }
  report.two_path_deviation = ratio_two_path_check(spec.psi_extra, box);

  if (!spec.psi_extra.is_finite_blaschke()) {
    report.notes.push_back(
        "psi has an exponential or singular factor; its model space is infinite-dimensional and "
        "decay evidence covers the Blaschke factor only");
  }
  int phi_power = 0;
  std::vector<cplx> disk_zeros;
  for (cplx l : spec.psi_extra.blaschke_zeros()) {
    const cplx a = (l - kI) / (l + kI);
    if (a == cplx{0.0, 0.0}) {
      ++phi_power;
    } else {
      disk_zeros.push_back(a);
    }
  }
  if (phi_power == 0 && disk_zeros.empty()) {
    report.notes.push_back("psi has no Blaschke zeros; the defect space is trivial");
  } else {
    const CompressedShiftMatrix k = compressed_shift(disk_zeros, phi_power);
    DecayEvidence& ev = report.decay_evidence;
    ev.dim = static_cast<int>(k.dim());
    ev.spectral_radius = spectral_radius(k);
    ev.predicted_steps = predicted_decay_steps(k, 1e-8);
    const Eigen::VectorXcd gamma =
        Eigen::VectorXcd::Constant(k.dim(), cplx{1.0 / std::sqrt(static_cast<double>(k.dim())), 0.0});
    ev.norms = decay_check(k, gamma.normalized(), ev.predicted_steps);
  }
  return report;
}

}  // namespace

ScatteringReport full_report(const ScatteringSpec& spec) {
  try {
    return assemble_report(spec);
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError("full_report", e.what());
  }
}

TranslationReport translation_model_check(int grid_size, int shift_steps) {
  if (grid_size < 16) throw DomainError("translation_model_check: grid_size must be >= 16");
  if (shift_steps < 0) throw DomainError("translation_model_check: negative shift count");
  using Field = std::vector<std::int64_t>;
  const int n = grid_size;
  const int half = n / 2;
  const int right_begin = n - half;  // odd grids leave the middle cell in neither half

  auto in_left = [&](int j) { return j < half; };
  auto in_right = [&](int j) { return j >= right_begin; };
  auto shift_right = [&](const Field& u, int s) {
    Field v(u.size(), 0);
    for (int j = s; j < n; ++j) v[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j - s)];
    return v;
  };
  auto shift_left = [&](const Field& u, int s) {
    Field v(u.size(), 0);
    for (int j = 0; j + s < n; ++j) v[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j + s)];
    return v;
  };
  auto supported_in = [&](const Field& u, auto&& pred) {
    for (int j = 0; j < n; ++j) {
      if (u[static_cast<std::size_t>(j)] != 0 && !pred(j)) return false;
    }
    return true;
  };
  auto energy = [&](const Field& u, int lo, int hi) {
    std::int64_t e = 0;
    for (int j = lo; j < hi; ++j) e += u[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(j)];
    return e;
  };
  auto dot = [](const Field& u, const Field& v) {
    return std::inner_product(u.begin(), u.end(), v.begin(), std::int64_t{0});
  };

  // Nonvanishing integer fields on each half.
  Field plus(static_cast<std::size_t>(n), 0);
  Field minus(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const std::int64_t value = (j * 7919 % 23) - 11;
    const std::int64_t nonzero = value == 0 ? 12 : value;
    if (in_right(j)) plus[static_cast<std::size_t>(j)] = nonzero;
    if (in_left(j)) minus[static_cast<std::size_t>(j)] = nonzero;
  }

  const int steps = std::max(shift_steps, n);
  TranslationReport r;

  r.axiom_i = true;
  for (int s = 0; s <= steps && r.axiom_i; ++s) {
    r.axiom_i = supported_in(shift_right(plus, s), in_right) &&
                supported_in(shift_left(minus, s), in_left);
  }

  r.axiom_ii = true;
  for (int window : {right_begin, right_begin + half / 2, n}) {
    std::int64_t previous = energy(plus, 0, window);
    const int vanish_at = window - right_begin;
    for (int s = 1; s <= steps && r.axiom_ii; ++s) {
      const std::int64_t e = energy(shift_right(plus, s), 0, window);
      if (e > previous || (s >= vanish_at && e != 0)) r.axiom_ii = false;
      previous = e;
    }
    if (energy(shift_right(plus, steps), 0, window) != 0) r.axiom_ii = false;
  }

  r.axiom_iv = dot(plus, minus) == 0;
  for (int j = 0; j < n && r.axiom_iv; ++j) {
    Field e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    if (in_left(j) && dot(plus, e) != 0) r.axiom_iv = false;
    if (in_right(j) && dot(minus, e) != 0) r.axiom_iv = false;
  }

  // (J u)[j] = u[n - 1 - j]; it must send the left cells bijectively onto the right ones.
  auto reflect = [&](const Field& u) { return Field(u.rbegin(), u.rend()); };
  std::vector<int> hit(static_cast<std::size_t>(n), 0);
  r.axiom_v = supported_in(reflect(minus), in_right) && reflect(reflect(minus)) == minus;
  for (int j = 0; j < half; ++j) {
    Field e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    const Field image = reflect(e);
    for (int k = 0; k < n; ++k) {
      if (image[static_cast<std::size_t>(k)] != 0) {
        if (!in_right(k)) r.axiom_v = false;
        ++hit[static_cast<std::size_t>(k)];
      }
    }
  }
  for (int k = right_begin; k < n; ++k) {
    if (hit[static_cast<std::size_t>(k)] != 1) r.axiom_v = false;
  }

  r.translation_law = true;
  for (int a = 0; a <= std::min(steps, 8) && r.translation_law; ++a) {
    for (int b = 0; b <= std::min(steps, 8); ++b) {
      if (shift_right(shift_right(plus, a), b) != shift_right(plus, a + b)) {
        r.translation_law = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace laxscatter
