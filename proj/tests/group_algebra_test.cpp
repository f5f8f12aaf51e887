// Copyright 2026 The gaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaqec/group_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gaqec/errors.hpp"
#include "test_support.hpp"

namespace gaqec {
namespace {

using testing::max_difference;
using testing::random_element;

AlgebraElement five_qubit_stabilizer(const PhaseSystem& sys) {
  const char* generators[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  std::vector<Complex> coeffs(element_size(2, 5));
  // All 16 products of the four independent generators.
  for (unsigned mask = 0; mask < 16; ++mask) {
    ErrorLabel label = testing::qubit_label("IIIII");
    for (unsigned bit = 0; bit < 4; ++bit) {
      if (mask & (1u << bit)) label = add(label, testing::qubit_label(generators[bit]), 2);
    }
    coeffs[sys.index_of(label)] = 1.0;
  }
  return AlgebraElement(2, 5, std::move(coeffs));
}

TEST(AlgebraElement, ConstructionChecksShape) {
  EXPECT_THROW(AlgebraElement(2, 2, std::vector<Complex>(15)), Error);
  const AlgebraElement zero(2, 2);
  EXPECT_EQ(zero.size(), 16u);
  EXPECT_EQ(zero.mass(), Complex{});
  EXPECT_THROW(AlgebraElement(1, 2), Error);
  EXPECT_THROW(AlgebraElement(2, 40), Error);
}

TEST(AlgebraElement, CachedMassMatchesRecomputedSum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto e = random_element(2, 3, rng);
    Complex sum{};
    for (const auto& c : e.coeffs()) sum += c;
    EXPECT_LT(std::abs(sum - e.mass()), 1e-9);
  }
}

TEST(Add, Examples) {
  const auto identity = AlgebraElement::monomial(2, 1, 0);
  EXPECT_EQ(add(identity, identity)[0], Complex(2.0, 0.0));

  std::mt19937_64 rng(1);
  const auto a = random_element(2, 2, rng);
  EXPECT_EQ(max_difference(add(a, AlgebraElement(2, 2)), a), 0.0);

  const auto two = add(AlgebraElement::monomial(2, 1, 1), AlgebraElement::monomial(2, 1, 3));
  EXPECT_EQ(two[0], Complex{});
  EXPECT_EQ(two[1], Complex(1.0, 0.0));
  EXPECT_EQ(two[3], Complex(1.0, 0.0));
  EXPECT_EQ(two.mass(), Complex(2.0, 0.0));
}

TEST(Add, RejectsShapeMismatch) {
  EXPECT_THROW(add(AlgebraElement(2, 1), AlgebraElement(2, 2)), Error);
  EXPECT_THROW(add(AlgebraElement(2, 1), AlgebraElement(3, 1)), Error);
}

TEST(Scale, Examples) {
  std::mt19937_64 rng(2);
  const auto a = random_element(3, 1, rng);
  const auto zero = scale(0.0, a);
  for (const auto& c : zero.coeffs()) EXPECT_EQ(c, Complex{});
  EXPECT_EQ(max_difference(scale(1.0, a), a), 0.0);
  EXPECT_EQ(scale(2.0, AlgebraElement::monomial(2, 3, 0))[0], Complex(2.0, 0.0));
}

TEST(Multiply, MonomialsMultiplyByGroupAddition) {
  const auto sys = build_pauli_system(3);
  const ErrorLabel lg{{{1, 2}, {0, 1}}};
  const ErrorLabel lh{{{2, 2}, {1, 1}}};
  const auto product = multiply(sys, AlgebraElement::monomial(3, 2, sys.index_of(lg)),
                                AlgebraElement::monomial(3, 2, sys.index_of(lh)));
  const std::size_t expected = sys.index_of(add(lg, lh, 3));
  for (std::size_t i = 0; i < product.size(); ++i) {
    EXPECT_EQ(product[i], i == expected ? Complex(1.0, 0.0) : Complex{});
  }
}

TEST(Multiply, IdentityIsNeutral) {
  const auto sys = build_pauli_system(2);
  std::mt19937_64 rng(5);
  const auto a = random_element(2, 2, rng);
  EXPECT_LT(max_difference(multiply(sys, a, AlgebraElement::monomial(2, 2, 0)), a), 1e-15);
}

TEST(Multiply, QubitZSquaredIsIdentity) {
  const auto sys = build_pauli_system(2);
  const std::size_t z = sys.ordering().position({0, 1});
  const auto sq = multiply(sys, AlgebraElement::monomial(2, 1, z), AlgebraElement::monomial(2, 1, z));
  EXPECT_EQ(sq[0], Complex(1.0, 0.0));
  EXPECT_EQ(sq.mass(), Complex(1.0, 0.0));
}

TEST(Multiply, CommutativeAndAssociative) {
  const auto sys = build_pauli_system(2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_element(2, 2, rng);
    const auto b = random_element(2, 2, rng);
    const auto c = random_element(2, 2, rng);
    const auto ab = multiply(sys, a, b);
    EXPECT_LT(max_difference(ab, multiply(sys, b, a)) / std::abs(ab.mass()), 1e-12);
    const auto left = multiply(sys, ab, c);
    const auto right = multiply(sys, a, multiply(sys, b, c));
    EXPECT_LT(max_difference(left, right) / std::abs(left.mass()), 1e-12);
  }
}

TEST(Transform, IdentityMapsToFullSum) {
  for (unsigned m : {2u, 3u}) {
    const auto sys = build_pauli_system(m);
    const auto result = transform(sys, AlgebraElement::monomial(m, 2, 0));
    EXPECT_EQ(result.source_mass, Complex(1.0, 0.0));
    for (const auto& c : result.element.coeffs()) EXPECT_LT(std::abs(c - 1.0), 1e-12);
    const auto naive = transform_naive(sys, AlgebraElement::monomial(m, 2, 0));
    EXPECT_LT(max_difference(result.element, naive.element), 1e-12);
  }
}

TEST(Transform, FullSumMapsToIdentity) {
  const auto sys = build_pauli_system(2);
  const auto all = AlgebraElement::full_sum(2, 2);
  for (const auto& result : {transform(sys, all), transform_naive(sys, all)}) {
    EXPECT_LT(std::abs(result.element[0] - 1.0), 1e-12);
    for (std::size_t i = 1; i < result.element.size(); ++i) EXPECT_LT(std::abs(result.element[i]), 1e-12);
  }
}

TEST(Transform, RejectsZeroMass) {
  const auto sys = build_pauli_system(2);
  for (const auto& element : {AlgebraElement(2, 2), add(AlgebraElement::monomial(2, 2, 1),
                                                        AlgebraElement::monomial(2, 2, 2, -1.0))}) {
    try {
      transform(sys, element);
      FAIL() << "expected ZeroMass";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ZeroMass);
    }
    EXPECT_THROW(transform_naive(sys, element), Error);
  }
}

TEST(Transform, FiveQubitStabilizerMapsToNormalizer) {
  const auto sys = build_pauli_system(2);
  const auto stabilizer = five_qubit_stabilizer(sys);
  ASSERT_EQ(stabilizer.mass(), Complex(16.0, 0.0));
  const auto fast = transform(sys, stabilizer);
  const auto naive = transform_naive(sys, stabilizer);
  EXPECT_LT(max_difference(fast.element, naive.element), 1e-9);

  const char* generators[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"};
  std::size_t members = 0;
  for (std::size_t index = 0; index < fast.element.size(); ++index) {
    const auto label = sys.label_at(index, 5);
    bool commutes = true;
    for (const char* g : generators) commutes &= testing::symplectic_orthogonal(label, testing::qubit_label(g), 2);
    members += commutes;
    EXPECT_LT(std::abs(fast.element[index] - (commutes ? 1.0 : 0.0)), 1e-12) << "index " << index;
  }
  EXPECT_EQ(members, 64u);
}

TEST(Transform, FastMatchesNaiveOnRandomElements) {
  std::mt19937_64 rng(2024);
  for (unsigned m : {2u, 3u}) {
    const auto sys = build_pauli_system(m);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < (m == 3 && n == 3 ? 5 : 100); ++trial) {
        const auto e = random_element(m, n, rng);
        const auto fast = transform(sys, e);
        const auto naive = transform_naive(sys, e);
        EXPECT_LT(max_difference(fast.element, naive.element), 1e-9) << "m=" << m << " n=" << n;
      }
    }
  }
}

TEST(Transform, ResultDoesNotDependOnThreadCount) {
  const auto sys = build_pauli_system(2);
  std::mt19937_64 rng(99);
  const auto e = random_element(2, 5, rng);
  const auto one = transform(sys, e, {.threads = 1});
  for (unsigned threads : {2u, 3u, 7u}) {
    const auto many = transform(sys, e, {.threads = threads});
    for (std::size_t i = 0; i < e.size(); ++i) ASSERT_EQ(one.element[i], many.element[i]);
  }
}

TEST(CharacterSums, AreLinear) {
  const auto sys = build_pauli_system(3);
  std::mt19937_64 rng(17);
  const auto a = random_element(3, 2, rng);
  const auto b = random_element(3, 2, rng);
  const Complex alpha{0.7, -1.3};
  const Complex beta{-2.0, 0.25};
  const auto combined = character_sums(sys, add(scale(alpha, a), scale(beta, b)));
  const auto separate = add(scale(alpha, character_sums(sys, a)), scale(beta, character_sums(sys, b)));
  EXPECT_LT(max_difference(combined, separate), 1e-9);
}

TEST(CharacterSums, IdentityCoefficientIsMass) {
  std::mt19937_64 rng(23);
  for (unsigned m : {2u, 3u}) {
    const auto sys = build_pauli_system(m);
    const auto e = random_element(m, 2, rng);
    EXPECT_LT(std::abs(character_sums(sys, e)[0] - e.mass()), 1e-9);
    EXPECT_LT(std::abs(transform(sys, e).element[0] - 1.0), 1e-12);
  }
}

TEST(DoubleTransform, IdentityElement) {
  const auto sys = build_pauli_system(2);
  const auto report = double_transform_scaling_check(sys, AlgebraElement::monomial(2, 3, 0));
  EXPECT_TRUE(report.passed);
  EXPECT_LT(report.max_residual, 1e-12);
}

TEST(DoubleTransform, CodeElementIsInvolution) {
  const auto sys = build_pauli_system(2);
  const auto stabilizer = five_qubit_stabilizer(sys);
  const auto once = transform(sys, stabilizer);
  // M = m^n / K = 16 and M' = K m^n = 64, so M M' = m^(2n).
  EXPECT_EQ(once.source_mass, Complex(16.0, 0.0));
  EXPECT_LT(std::abs(once.element.mass() - 64.0), 1e-9);
  const auto twice = transform(sys, once.element);
  EXPECT_LT(max_difference(twice.element, stabilizer), 1e-9);
  EXPECT_TRUE(double_transform_scaling_check(sys, stabilizer).passed);
}

TEST(DoubleTransform, RandomNonnegativeElements) {
  const auto sys = build_pauli_system(2);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = random_element(2, 2, rng, true);
    const auto report = double_transform_scaling_check(sys, e);
    EXPECT_TRUE(report.passed) << report.max_residual;
  }
}

}  // namespace
}  // namespace gaqec
