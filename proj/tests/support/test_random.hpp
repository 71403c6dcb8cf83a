#pragma once

#include <complex>
#include <random>
#include <vector>

#include "laxscatter/inner.hpp"

namespace laxscatter::testing {

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'0000 + salt); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// <= max_zeros zeros, alpha in [0, 2], <= max_atoms atoms, random phase.
inline UpperInner random_inner(std::mt19937_64& rng, int max_zeros = 4, int max_atoms = 2) {
  std::vector<std::complex<double>> zeros(static_cast<std::size_t>(uniform_int(rng, 0, max_zeros)));
  for (auto& z : zeros) z = {uniform(rng, -2.0, 2.0), uniform(rng, 0.2, 3.0)};
  std::vector<SingularAtom> atoms(static_cast<std::size_t>(uniform_int(rng, 0, max_atoms)));
  for (auto& a : atoms) a = {uniform(rng, -2.0, 2.0), uniform(rng, 0.1, 1.0)};
  return UpperInner(std::move(zeros), uniform(rng, 0.0, 2.0), std::move(atoms),
                    std::polar(1.0, uniform(rng, -3.0, 3.0)));
}

inline std::complex<double> random_lower(std::mt19937_64& rng) {
  return {uniform(rng, -3.0, 3.0), uniform(rng, -3.0, -0.1)};
}

// Half-plane zero whose Cayley image (z - i)/(z + i) is the disk point a.
inline std::complex<double> upper_from_disk(std::complex<double> a) {
  return std::complex<double>{0.0, 1.0} * (1.0 + a) / (1.0 - a);
}

}  // namespace laxscatter::testing
