// Copyright 2026 The rankone Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rankone/hardy.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_instances.hpp"
#include "rankone/staralg.hpp"
#include "test_util.hpp"

namespace rankone {
namespace {

using testing::CoeffsNear;
using testing::ComplexNear;
using testing::max_diff;

const ToleranceConfig kTol;
const RatFunc kOne = RatFunc::constant(1.0);
const RatFunc kZ = RatFunc::monomial(1);

TEST(InnerProduct, Examples) {
  EXPECT_TRUE(ComplexNear(inner_product(kOne, kOne, kTol), 1.0, 1e-15));
  EXPECT_TRUE(ComplexNear(inner_product(kZ, kOne, kTol), 0.0, 1e-15));
  const RatFunc k = kernel(0.5, 0);
  EXPECT_TRUE(ComplexNear(inner_product(k, k, kTol), 4.0 / 3.0, 1e-14));
  const auto c = taylor_coeffs(k, 64);
  Complex s = 0.0;
  for (const auto& x : c) s += x * std::conj(x);
  EXPECT_TRUE(ComplexNear(inner_product(k, k, kTol), s, 1e-14));
}

TEST(InnerProduct, ReproducingProperty) {
  testing::RandomInstances gen(101);
  for (int it = 0; it < 30; ++it) {
    const RatFunc f = gen.rat();
    const Complex a = gen.in_disc(0.9);
    for (int n = 0; n <= 3; ++n) {
      const Complex want = f.derivative_at(a, n);
      EXPECT_TRUE(ComplexNear(inner_product(f, kernel(a, n), kTol), want, 1e-9 * std::max(1.0, std::abs(want))));
    }
  }
}

TEST(InnerProduct, MatchesQuadrature) {
  testing::RandomInstances gen(102);
  for (int it = 0; it < 20; ++it) {
    const RatFunc f = gen.rat(), g = gen.rat();
    EXPECT_TRUE(ComplexNear(inner_product(f, g, kTol), testing::quad_inner(f, g), 1e-10));
  }
}

TEST(Toeplitz, IdentitySymbol) {
  testing::RandomInstances gen(111);
  const RatFunc r = gen.rat();
  EXPECT_TRUE(CoeffsNear(toeplitz_conj_apply(kOne, r, kTol), r, 1e-14));
}

TEST(Toeplitz, ShiftSymbolOnKernel) {
  const Complex a(0.4, 0.3);
  const RatFunc got = toeplitz_conj_apply(kZ, kernel(a, 0), kTol);
  EXPECT_TRUE(CoeffsNear(got, std::conj(a) * kernel(a, 0), 1e-14));
  EXPECT_LT(max_diff(taylor_coeffs(got, 16), testing::quad_toeplitz_conj(kZ, kernel(a, 0), 16)), 1e-12);
}

TEST(Toeplitz, ShiftSymbolOnMonomial) {
  const RatFunc got = toeplitz_conj_apply(kZ, RatFunc::monomial(2), kTol);
  EXPECT_TRUE(CoeffsNear(got, kZ, 1e-15));
}

TEST(Toeplitz, MatchesQuadrature) {
  testing::RandomInstances gen(112);
  for (int it = 0; it < 20; ++it) {
    const RatFunc phi = gen.phi(), r = gen.rat();
    const auto got = taylor_coeffs(toeplitz_conj_apply(phi, r, kTol), 16);
    EXPECT_LT(max_diff(got, testing::quad_toeplitz_conj(phi, r, 16)), 1e-10);
  }
}

TEST(GammaPlus, Examples) {
  testing::RandomInstances gen(121);
  const Complex c(0.7, -0.2);
  const RatFunc g = gamma_plus(kOne, RatFunc::constant(c), kTol);
  EXPECT_TRUE(CoeffsNear(g, c * kZ, 1e-15));
  // Gamma_+(w; r) = w <r, phi k_w>
  for (int i = 0; i < 5; ++i) {
    const Complex w = gen.in_disc(0.9);
    const Complex q = w * testing::quad_inner(RatFunc::constant(c), kernel(w, 0));
    EXPECT_TRUE(ComplexNear(g(w), q, 1e-12));
  }
  EXPECT_TRUE(gamma_plus(kZ, kOne, kTol).is_zero());
  EXPECT_TRUE(CoeffsNear(gamma_plus(kZ, kZ, kTol), kZ, 1e-15));
}

TEST(GammaPlus, VanishesAtOriginAndIsLinear) {
  testing::RandomInstances gen(122);
  for (int it = 0; it < 30; ++it) {
    const RatFunc phi = gen.phi(), r = gen.rat(), s = gen.rat();
    const Complex c = gen.complex();
    EXPECT_LT(std::abs(gamma_plus(phi, r, kTol)(0.0)), 1e-15);
    const RatFunc lhs = gamma_plus(phi, r + c * s, kTol);
    const RatFunc rhs = gamma_plus(phi, r, kTol) + c * gamma_plus(phi, s, kTol);
    EXPECT_TRUE(CoeffsNear(lhs, rhs, 1e-10));
  }
}

TEST(GammaPlus, HomomorphismForStarProduct) {
  testing::RandomInstances gen(123);
  for (int it = 0; it < 30; ++it) {
    const auto ctx = PhiContext::build(gen.phi());
    const RatFunc r = gen.rat(), s = gen.rat();
    const RatFunc lhs = gamma_plus(ctx.phi(), times(ctx, r, s), kTol);
    const RatFunc rhs = multiply(gamma_plus(ctx.phi(), r, kTol), gamma_plus(ctx.phi(), s, kTol), kTol);
    EXPECT_TRUE(CoeffsNear(lhs, rhs, 1e-8));
  }
}

TEST(GammaMinus, Examples) {
  testing::RandomInstances gen(131);
  const RatFunc r = gen.rat();
  EXPECT_LT(coefficient_norm(gamma_minus_fn(kOne, r, kTol)), 1e-14);
  EXPECT_LT(std::abs(testing::quad_gamma_minus(kOne, r, 0.3)), 1e-12);

  EXPECT_TRUE(CoeffsNear(gamma_minus_fn(kZ, kOne, kTol), RatFunc::constant(-1.0), 1e-15));
  EXPECT_TRUE(ComplexNear(testing::quad_gamma_minus(kZ, kOne, 0.3), -1.0, 1e-12));

  const RatFunc z2 = RatFunc::monomial(2);
  EXPECT_TRUE(CoeffsNear(gamma_minus_fn(z2, kZ, kTol), RatFunc::constant(-1.0), 1e-15));
  EXPECT_TRUE(ComplexNear(testing::quad_gamma_minus(z2, kZ, 0.3), -1.0, 1e-12));
}

TEST(GammaMinus, ConjugateLinear) {
  testing::RandomInstances gen(132);
  const Complex i(0.0, 1.0);
  for (int it = 0; it < 30; ++it) {
    const RatFunc phi = gen.phi(), r = gen.rat();
    EXPECT_TRUE(CoeffsNear(gamma_minus_fn(phi, i * r, kTol), -i * gamma_minus_fn(phi, r, kTol), 1e-10));
  }
}

TEST(GammaMinus, MatchesQuadrature) {
  testing::RandomInstances gen(133);
  for (int it = 0; it < 20; ++it) {
    const RatFunc phi = gen.phi(), r = gen.rat();
    const Complex w = gen.in_disc(0.9);
    EXPECT_TRUE(ComplexNear(gamma_minus_fn(phi, r, kTol)(w), testing::quad_gamma_minus(phi, r, w), 1e-8));
  }
}

TEST(OrdAt, Examples) {
  EXPECT_EQ(ord_at(RatFunc::polynomial(Poly{1.0, -2.0}), 0.5, 4, kTol).ord, 1);
  EXPECT_EQ(ord_at(RatFunc::constant(2.0), Complex(0.3, 0.1), 4, kTol).ord, 0);
  EXPECT_EQ(ord_at(RatFunc::polynomial(Poly{0.09, -0.6, 1.0}), 0.3, 4, kTol).ord, 2);
}

TEST(OrdAt, CapSentinel) {
  const auto rep = ord_at(RatFunc::monomial(5), 0.0, 2, kTol);
  EXPECT_EQ(rep.ord, 3);
  EXPECT_TRUE(rep.capped);
}

TEST(OrdAt, PoleRejected) { EXPECT_THROW(ord_at(RatFunc::pole_power(2.0, 1), 2.0, 2, kTol), PoleAt); }

TEST(ZerosInClosedDisc, Examples) {
  const auto a = zeros_in_closed_disc(RatFunc::polynomial(Poly{1.0, -2.0}), kTol);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(ComplexNear(a[0].location, 0.5, 1e-15));
  EXPECT_EQ(a[0].multiplicity, 1);
  EXPECT_EQ(a[0].region, Region::interior);

  EXPECT_TRUE(zeros_in_closed_disc(RatFunc::polynomial(Poly{1.0, -0.5}), kTol).empty());

  const auto c = zeros_in_closed_disc(RatFunc::polynomial(Poly{1.0, -1.0}), kTol);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].region, Region::boundary);

  EXPECT_THROW(zeros_in_closed_disc(RatFunc{}, kTol), IdenticallyZero);
}

}  // namespace
}  // namespace rankone
