#include "laxscatter/inner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "laxscatter/errors.hpp"

namespace laxscatter {
namespace {

constexpr cplx kI{0.0, 1.0};

std::string show(cplx z) { return fmt::format("({}, {})", z.real(), z.imag()); }

// Adds +0.0 so that negated zeros never print as -0.
cplx positive_zero(cplx z) { return {z.real() + 0.0, z.imag() + 0.0}; }

void check_essential(const UpperInner& psi, cplx z, const char* who) {
  for (const auto& atom : psi.singular_atoms()) {
    if (std::abs(z - atom.point) < kEssentialExclusion ||
        std::abs(z + atom.point) < kEssentialExclusion) {
      throw DomainError(fmt::format("{}: z = {} is within {} of the essential point {}",
                                    who, show(z), kEssentialExclusion, atom.point));
    }
  }
}

// The defining formula of psi without any half-plane restriction.
cplx continued_inner(const UpperInner& psi, cplx z) {
  cplx value = psi.unimodular_const() * std::exp(kI * psi.exp_alpha() * z);
  for (cplx l : psi.blaschke_zeros()) value *= (z - l) / (z - std::conj(l));
  cplx exponent{0.0, 0.0};
  for (const auto& [t, mass] : psi.singular_atoms()) {
    exponent += mass * (1.0 + t * z) / (t - z);
  }
  return value * std::exp(kI * exponent);
}

}  // namespace

UpperInner::UpperInner(std::vector<cplx> blaschke_zeros, double exp_alpha,
                       std::vector<SingularAtom> singular_atoms, cplx unimodular_const)
    : zeros_(std::move(blaschke_zeros)),
      alpha_(exp_alpha),
      atoms_(std::move(singular_atoms)),
      const_(unimodular_const) {
  for (cplx l : zeros_) {
    if (!(l.imag() > 0.0) || !std::isfinite(l.real()) || !std::isfinite(l.imag())) {
      throw InvariantError("UpperInner: Blaschke zero " + show(l) +
                           " is not in the open upper half-plane");
    }
  }
  if (!(alpha_ >= 0.0) || !std::isfinite(alpha_)) {
    throw InvariantError(fmt::format("UpperInner: exponential coefficient {} < 0", alpha_));
  }
  for (const auto& atom : atoms_) {
    if (!(atom.mass > 0.0) || !std::isfinite(atom.mass) || !std::isfinite(atom.point)) {
      throw InvariantError(fmt::format("UpperInner: atom at {} has non-positive mass {}",
                                       atom.point, atom.mass));
    }
  }
  if (!(std::abs(std::abs(const_) - 1.0) <= 1e-14)) {
    throw InvariantError("UpperInner: constant " + show(const_) + " is not unimodular");
  }
}

RatioFunction::RatioFunction(UpperInner source) : source_(std::move(source)) {
  zeros_lower_.reserve(2 * source_.blaschke_zeros().size());
  for (cplx l : source_.blaschke_zeros()) {
    zeros_lower_.push_back(positive_zero(-l));
    zeros_lower_.push_back(positive_zero(std::conj(l)));
  }
  for (const auto& atom : source_.singular_atoms()) {
    essential_.push_back(atom.point + 0.0);
    essential_.push_back(-atom.point + 0.0);
  }
  std::sort(essential_.begin(), essential_.end());
  essential_.erase(std::unique(essential_.begin(), essential_.end()), essential_.end());
}

cplx eval_inner(const UpperInner& psi, cplx z) {
  if (z.imag() < 0.0) {
    throw DomainError("eval_inner: z = " + show(z) + " lies in the lower half-plane");
  }
  for (const auto& atom : psi.singular_atoms()) {
    if (z == cplx{atom.point, 0.0}) {
      throw DomainError(fmt::format("eval_inner: z coincides with the atom at {}", atom.point));
    }
  }
  return continued_inner(psi, z);
}

UpperInner mul_inner(const UpperInner& a, const UpperInner& b) {
  std::vector<cplx> zeros = a.blaschke_zeros();
  zeros.insert(zeros.end(), b.blaschke_zeros().begin(), b.blaschke_zeros().end());

  std::vector<SingularAtom> atoms = a.singular_atoms();
  for (const auto& atom : b.singular_atoms()) {
    auto it = std::find_if(atoms.begin(), atoms.end(),
                           [&](const SingularAtom& x) { return x.point == atom.point; });
    if (it != atoms.end()) {
      it->mass += atom.mass;
    } else {
      atoms.push_back(atom);
    }
  }
  cplx c = a.unimodular_const() * b.unimodular_const();
  return UpperInner(std::move(zeros), a.exp_alpha() + b.exp_alpha(), std::move(atoms),
                    c / std::abs(c));
}

UpperInner div_inner(const UpperInner& num, const UpperInner& den) {
  std::vector<cplx> zeros = num.blaschke_zeros();
  for (cplx l : den.blaschke_zeros()) {
    auto it = std::find(zeros.begin(), zeros.end(), l);
    if (it == zeros.end()) {
      throw DivisibilityError(DivisibilityComponent::kBlaschkeZero,
                              "div_inner: divisor zero " + show(l) +
                                  " is not a zero of the dividend (with multiplicity)");
    }
    zeros.erase(it);
  }

  if (den.exp_alpha() > num.exp_alpha()) {
    throw DivisibilityError(
        DivisibilityComponent::kExponential,
        fmt::format("div_inner: divisor exponential coefficient {} exceeds dividend's {}",
                    den.exp_alpha(), num.exp_alpha()));
  }
  double alpha = num.exp_alpha() - den.exp_alpha();

  std::vector<SingularAtom> atoms = num.singular_atoms();
  for (const auto& atom : den.singular_atoms()) {
    auto it = std::find_if(atoms.begin(), atoms.end(),
                           [&](const SingularAtom& x) { return x.point == atom.point; });
    if (it == atoms.end() || atom.mass > it->mass * (1.0 + 1e-14)) {
      throw DivisibilityError(
          DivisibilityComponent::kSingularAtom,
          fmt::format("div_inner: divisor atom ({}, {}) exceeds the dividend's mass there",
                      atom.point, atom.mass));
    }
    double rest = it->mass - atom.mass;
    if (rest <= 1e-14 * it->mass) {
      atoms.erase(it);
    } else {
      it->mass = rest;
    }
  }
  cplx c = num.unimodular_const() / den.unimodular_const();
  return UpperInner(std::move(zeros), alpha, std::move(atoms), c / std::abs(c));
}

RatioFunction make_ratio(const UpperInner& psi) { return RatioFunction(psi); }

cplx eval_ratio(const RatioFunction& ratio, cplx z) {
  if (z.imag() > 0.0) {
    throw DomainError("eval_ratio: z = " + show(z) + " lies in the upper half-plane");
  }
  const UpperInner& psi = ratio.source();
  check_essential(psi, z, "eval_ratio");

  cplx value = std::exp(-kI * ratio.exp_alpha2() * z);
  for (cplx l : psi.blaschke_zeros()) {
    cplx lc = std::conj(l);
    value *= (z + l) / (z + lc) * ((z - lc) / (z - l));
  }
  cplx integral{0.0, 0.0};
  for (const auto& [t, mass] : psi.singular_atoms()) {
    integral += mass * (1.0 + t * t) / (t * t - z * z);
  }
  return value * std::exp(-2.0 * kI * z * integral);
}

cplx factorwise_ratio(const UpperInner& psi, cplx z) {
  check_essential(psi, z, "factorwise_ratio");
  return continued_inner(psi, -z) / continued_inner(psi, z);
}

double ratio_two_path_check(const UpperInner& psi, std::span<const cplx> grid) {
  const RatioFunction ratio = make_ratio(psi);
  double worst = 0.0;
  for (cplx z : grid) {
    worst = std::max(worst, std::abs(eval_ratio(ratio, z) - factorwise_ratio(psi, z)));
  }
  return worst;
}

SingularitySet singularity_set(const RatioFunction& ratio, std::span<const cplx> base) {
  SingularitySet out;
  out.points.assign(base.begin(), base.end());
  out.points.insert(out.points.end(), ratio.zeros_lower().begin(), ratio.zeros_lower().end());
  out.boundary = ratio.boundary_essential();
  return out;
}

}  // namespace laxscatter
