#include <gtest/gtest.h>

#include <cmath>

#include "laxscatter/errors.hpp"
#include "laxscatter/hardy.hpp"
#include "laxscatter/shift_calculus.hpp"
#include "test_random.hpp"

namespace laxscatter {
namespace {

using namespace std::complex_literals;
using testing::make_rng;
using testing::uniform;
using testing::uniform_int;
using testing::upper_from_disk;

double max_coeff_error(const DiskSymbol& s, const std::vector<cplx>& expected) {
  double worst = 0.0;
  for (std::size_t k = 0; k < s.taylor_coeffs.size(); ++k) {
    const cplx e = k < expected.size() ? expected[k] : 0.0;
    worst = std::max(worst, std::abs(s.taylor_coeffs[k] - e));
  }
  return worst;
}

UpperInner random_blaschke_half_disk(std::mt19937_64& rng, int max_zeros) {
  std::vector<cplx> zeros(static_cast<std::size_t>(uniform_int(rng, 1, max_zeros)));
  for (auto& z : zeros) z = upper_from_disk(std::polar(uniform(rng, 0.0, 0.5), uniform(rng, -3.14, 3.14)));
  return UpperInner::blaschke(std::move(zeros));
}

TEST(DiskSymbol, ZeroAtIIsIdentityMap) {
  const auto s = disk_symbol_of(UpperInner::blaschke({1.0i}), 64);
  EXPECT_LT(max_coeff_error(s, {0.0, 1.0}), 1e-12);
  ASSERT_TRUE(s.source.has_value());
}

TEST(DiskSymbol, ConstantOne) {
  EXPECT_LT(max_coeff_error(disk_symbol_of(UpperInner{}, 16), {1.0}), 1e-14);
}

TEST(DiskSymbol, DoubleZeroIsSquare) {
  EXPECT_LT(max_coeff_error(disk_symbol_of(UpperInner::blaschke({1.0i, 1.0i}), 64), {0.0, 0.0, 1.0}),
            1e-12);
}

TEST(DiskSymbol, SingleDiskZeroMatchesSeries) {
  // The half-plane factor becomes c (lambda - a)/(1 - conj(a) lambda) with
  // c = (1 - conj a)/(1 - a), and
  // (lambda - a)/(1 - conj(a) lambda) = -a + sum_{k>=1} (1 - |a|^2) conj(a)^{k-1} lambda^k.
  const cplx a = 0.3 - 0.2i;
  const cplx c = (1.0 - std::conj(a)) / (1.0 - a);
  const auto s = disk_symbol_of(UpperInner::blaschke({upper_from_disk(a)}), 128);
  std::vector<cplx> expected{-c * a};
  for (int k = 1; k < 128; ++k) expected.push_back(c * (1.0 - std::norm(a)) * std::pow(std::conj(a), k - 1));
  EXPECT_LT(max_coeff_error(s, expected), 1e-12);
}

TEST(DiskSymbol, OrderMustBePowerOfTwo) {
  EXPECT_THROW(disk_symbol_of(UpperInner{}, 4), DomainError);
  EXPECT_THROW(disk_symbol_of(UpperInner{}, 24), DomainError);
}

TEST(DiskSymbol, SampledResolventMatchesExactSymbol) {
  const auto sampled = disk_symbol_sampled(
      [](cplx lambda) {
        const cplx delta = 1.0i * (1.0 + lambda) / (1.0 - lambda);
        return 1.0 / (delta + 1.0i);
      },
      64);
  EXPECT_LT(max_coeff_error(sampled, resolvent_symbol(64).taylor_coeffs), 1e-13);
}

TEST(DiskSymbol, PropertyParsevalMonotoneForBlaschke) {
  auto rng = make_rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto psi = random_blaschke_half_disk(rng, 4);
    double previous = 0.0;
    for (int order : {8, 16, 32, 64, 128, 256}) {
      const double sum = disk_symbol_of(psi, order).parseval_sum();
      EXPECT_GE(sum, previous - 1e-12);
      EXPECT_LE(sum, 1.0 + 1e-8);
      previous = sum;
    }
    EXPECT_NEAR(previous, 1.0, 1e-8);
  }
}

TEST(ResolventSymbol, Coefficients) {
  const auto s = resolvent_symbol(8);
  EXPECT_EQ(s.taylor_coeffs[0], -0.5i);
  EXPECT_EQ(s.taylor_coeffs[1], 0.5i);
  for (int k = 2; k < 8; ++k) EXPECT_EQ(s.taylor_coeffs[static_cast<std::size_t>(k)], 0.0);
}

TEST(Toeplitz, ShiftSymbol) {
  DiskSymbol s{{0.0, 1.0, 0.0}, std::nullopt, 0.0};
  Eigen::MatrixXcd expected(3, 3);
  expected << 0, 0, 0, 1, 0, 0, 0, 1, 0;
  EXPECT_EQ(toeplitz_of(s).matrix, expected);
  EXPECT_EQ(toeplitz_of(s).matrix, shift_matrix(3));
}

TEST(Toeplitz, IdentitySymbol) {
  DiskSymbol s{std::vector<cplx>(10, 0.0), std::nullopt, 0.0};
  s.taylor_coeffs[0] = 1.0;
  EXPECT_EQ(toeplitz_of(s).matrix, Eigen::MatrixXcd::Identity(10, 10));
}

TEST(Toeplitz, MonomialIsShiftPower) {
  for (int k = 0; k < 5; ++k) {
    DiskSymbol s{std::vector<cplx>(12, 0.0), std::nullopt, 0.0};
    s.taylor_coeffs[static_cast<std::size_t>(k)] = 1.0;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(12, 12);
    for (int j = 0; j < k; ++j) p = p * shift_matrix(12);
    EXPECT_EQ(toeplitz_of(s).matrix, p);
  }
}

TEST(Toeplitz, ResolventIdentityIsExact) {
  for (int order : {2, 3, 8, 64, 257}) {
    const Eigen::MatrixXcd expected =
        (-0.5i) * (Eigen::MatrixXcd::Identity(order, order) - shift_matrix(order));
    EXPECT_EQ(toeplitz_of(resolvent_symbol(order)).matrix, expected);
  }
}

TEST(IsometryDefect, MonomialIsExactForLargeMargin) {
  for (int k = 0; k < 6; ++k) {
    DiskSymbol s{std::vector<cplx>(32, 0.0), std::nullopt, 0.0};
    s.taylor_coeffs[static_cast<std::size_t>(k)] = 1.0;
    EXPECT_EQ(isometry_defect(toeplitz_of(s), k), 0.0);
  }
}

TEST(IsometryDefect, BlaschkeAtTwoI) {
  const auto s = disk_symbol_of(UpperInner::blaschke({2.0i}), 256);
  EXPECT_LT(isometry_defect(toeplitz_of(s), 64), 1e-8);
}

TEST(IsometryDefect, NonInnerConstantFlagged) {
  DiskSymbol s{std::vector<cplx>(256, 0.0), std::nullopt, 0.0};
  s.taylor_coeffs[0] = 0.5;
  EXPECT_NEAR(isometry_defect(toeplitz_of(s), 64), 0.5, 1e-10);
}

TEST(IsometryDefect, MarginValidated) {
  DiskSymbol s{std::vector<cplx>(8, 0.0), std::nullopt, 0.0};
  EXPECT_THROW(isometry_defect(toeplitz_of(s), 8), std::invalid_argument);
  EXPECT_THROW(isometry_defect(toeplitz_of(s), -1), std::invalid_argument);
}

TEST(IsometryDefect, PropertyInnerSymbolsAreIsometric) {
  auto rng = make_rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = disk_symbol_of(random_blaschke_half_disk(rng, 4), 256);
    EXPECT_LT(isometry_defect(toeplitz_of(s), 64), s.tail_bound + 1e-10);
    EXPECT_LT(isometry_defect(toeplitz_of(s), 64), 1e-8);
  }
}

TEST(CommutationDefect, PropertyExactZero) {
  auto rng = make_rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    DiskSymbol s{std::vector<cplx>(64), std::nullopt, 0.0};
    for (auto& c : s.taylor_coeffs) c = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    EXPECT_EQ(commutation_defect(toeplitz_of(s)), 0.0);
  }
  EXPECT_EQ(commutation_defect(toeplitz_of(resolvent_symbol(64))), 0.0);
}

TEST(MultiplySymbols, ProductOrderIrrelevant) {
  const auto a = disk_symbol_of(UpperInner::blaschke({2.0i}), 64);
  const auto b = resolvent_symbol(64);
  const auto ab = toeplitz_of(multiply_symbols(a, b)).matrix;
  const auto ba = toeplitz_of(multiply_symbols(b, a)).matrix;
  EXPECT_LT((ab - ba).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MultiplySymbols, ShiftCommutesWithResolvent) {
  DiskSymbol lambda{std::vector<cplx>(64, 0.0), std::nullopt, 0.0};
  lambda.taylor_coeffs[1] = 1.0;
  const auto x = toeplitz_of(lambda).matrix;
  const auto y = toeplitz_of(resolvent_symbol(64)).matrix;
  EXPECT_EQ((x * y - y * x).topLeftCorner(63, 63).cwiseAbs().maxCoeff(), 0.0);
}

TEST(MultiplySymbols, PropertyToeplitzIsMultiplicative) {
  auto rng = make_rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = disk_symbol_of(random_blaschke_half_disk(rng, 3), 64);
    const auto b = disk_symbol_of(random_blaschke_half_disk(rng, 3), 64);
    const auto prod = multiply_symbols(a, b);
    ASSERT_TRUE(prod.source.has_value());
    const Eigen::MatrixXcd lhs = toeplitz_of(prod).matrix;
    const Eigen::MatrixXcd rhs = toeplitz_of(a).matrix * toeplitz_of(b).matrix;
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
    // the product symbol is the symbol of the product inner function
    const auto direct = disk_symbol_of(*prod.source, 64);
    EXPECT_LT(max_coeff_error(prod, direct.taylor_coeffs), 1e-10);
  }
}

TEST(MultiplySymbols, OrderMismatchRejected) {
  EXPECT_THROW(multiply_symbols(resolvent_symbol(8), resolvent_symbol(16)), std::invalid_argument);
}

// The compressed shift built from the zeros of the same symbol decays.
TEST(ShiftCalculus, DecayFromSymbolZeros) {
  auto rng = make_rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> disk(static_cast<std::size_t>(uniform_int(rng, 1, 4)));
    for (auto& a : disk) a = std::polar(uniform(rng, 0.05, 0.5), uniform(rng, -3.0, 3.0));
    std::vector<cplx> upper;
    for (cplx a : disk) upper.push_back(upper_from_disk(a));
    const auto s = disk_symbol_of(UpperInner::blaschke(upper), 256);
    EXPECT_LT(isometry_defect(toeplitz_of(s), 64), 1e-8);
    const auto k = compressed_shift(disk, 0);
    const Eigen::VectorXcd gamma =
        Eigen::VectorXcd::Constant(k.dim(), 1.0 / std::sqrt(static_cast<double>(k.dim())));
    EXPECT_LT(decay_check(k, gamma, predicted_decay_steps(k, 1e-8)).back(), 1e-8);
  }
}

}  // namespace
}  // namespace laxscatter
