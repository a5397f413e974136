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

#include "rankone/cpoly.hpp"

#include <random>

#include <gtest/gtest.h>

#include "random_instances.hpp"
#include "test_util.hpp"

namespace rankone {
namespace {

using testing::ComplexNear;
using testing::max_diff;

const ToleranceConfig kTol;

TEST(PolyArith, DerivativeOfCube) {
  const Poly d = Poly::monomial(3).derivative();
  EXPECT_EQ(d.degree(), 2);
  EXPECT_EQ(d[2], Complex(3.0));
  EXPECT_EQ(d[0], Complex(0.0));
}

TEST(PolyArith, DivmodExactFactor) {
  const auto [q, r] = divmod(Poly{-1.0, 0.0, 1.0}, Poly{-1.0, 1.0});
  EXPECT_LT(max_diff(q.coeffs(), Poly{1.0, 1.0}.coeffs()), 1e-15);
  EXPECT_TRUE(r.is_zero());
}

TEST(PolyArith, EvalLinearRoot) { EXPECT_EQ(Poly({1.0, -2.0}).eval(0.5), Complex(0.0)); }

TEST(PolyArith, DivisionByZeroPolynomial) { EXPECT_THROW(divmod(Poly{1.0, 1.0}, Poly{}), DivisionByZero); }

TEST(PolyArith, TrailingZerosTrimmed) {
  Poly p{1.0, 2.0, 1e-20};
  p.trim(1e-12);
  EXPECT_EQ(p.degree(), 1);
}

TEST(PolyArith, TaylorShift) {
  // (z + 1)^2 at z = h + 2: h^2 + 6h + 9
  const Poly s = Poly{1.0, 2.0, 1.0}.taylor_shift(2.0);
  EXPECT_LT(max_diff(s.coeffs(), Poly{9.0, 6.0, 1.0}.coeffs()), 1e-14);
}

TEST(PolyArith, RandomDivmodRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  auto rand_poly = [&](int deg) {
    std::vector<Complex> c;
    for (int i = 0; i <= deg; ++i) c.push_back({U(rng), U(rng)});
    return Poly(std::move(c));
  };
  for (int it = 0; it < 200; ++it) {
    const Poly a = rand_poly(static_cast<int>(rng() % 7));
    const Poly b = rand_poly(static_cast<int>(rng() % 7));
    const auto [q, r] = divmod(a, b);
    EXPECT_LT(r.degree(), b.degree());
    const Poly back = q * b + r;
    EXPECT_LT(max_diff(back.coeffs(), a.coeffs()), 1e-10 * std::max(1.0, a.max_abs()));
  }
}

TEST(Roots, DoubleAndSimple) {
  const std::vector<Complex> rs = {0.5, 0.5, 3.0};
  const auto z = roots(Poly::from_roots(rs), kTol);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_TRUE(ComplexNear(z[0].location, 0.5, 1e-10));
  EXPECT_EQ(z[0].multiplicity, 2);
  EXPECT_EQ(z[0].region, Region::interior);
  EXPECT_TRUE(ComplexNear(z[1].location, 3.0, 1e-12));
  EXPECT_EQ(z[1].multiplicity, 1);
  EXPECT_EQ(z[1].region, Region::exterior);
}

TEST(Roots, Linear) {
  const auto z = roots(Poly{1.0, -2.0}, kTol);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(ComplexNear(z[0].location, 0.5, 1e-15));
  EXPECT_EQ(z[0].region, Region::interior);
}

TEST(Roots, UnitCircleRootsAreBoundary) {
  const auto z = roots(Poly{1.0, 0.0, 1.0}, kTol);
  ASSERT_EQ(z.size(), 2u);
  for (const auto& d : z) {
    EXPECT_EQ(d.region, Region::boundary);
    EXPECT_NEAR(std::abs(d.location), 1.0, 1e-15);
  }
}

TEST(Roots, ConstantHasNone) { EXPECT_TRUE(roots(Poly::constant(3.0), kTol).empty()); }

TEST(Roots, ZeroPolynomialThrows) { EXPECT_THROW(roots(Poly{}, kTol), IdenticallyZero); }

TEST(Roots, TripleRootSplitByRoundingIsMerged) {
  const Complex a(0.08775825619, -0.04794255386);
  const std::vector<Complex> rs = {a, a, a, Complex(2.0, 0.5)};
  const auto z = roots(Poly::from_roots(rs), kTol);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(z[0].multiplicity, 3);
  EXPECT_TRUE(ComplexNear(z[0].location, a, 1e-9));
}

TEST(Roots, CloseDistinctRootsStaySeparate) {
  const std::vector<Complex> rs = {0.3, 0.301, -0.7};
  const auto z = roots(Poly::from_roots(rs), kTol);
  ASSERT_EQ(z.size(), 3u);
  for (const auto& d : z) EXPECT_EQ(d.multiplicity, 1);
}

TEST(Roots, RandomReconstruction) {
  testing::RandomInstances gen(5);
  for (int it = 0; it < 100; ++it) {
    std::vector<Complex> rs;
    const int deg = gen.integer(1, 8);
    for (int i = 0; i < deg; ++i) rs.push_back(gen.complex(2.0));
    const Complex lead = gen.complex(1.0) + Complex(1.5, 0.0);
    const Poly p = Poly::from_roots(rs, lead);
    std::vector<Complex> found;
    for (const auto& d : roots(p, kTol))
      for (int m = 0; m < d.multiplicity; ++m) found.push_back(d.location);
    ASSERT_EQ(static_cast<int>(found.size()), deg);
    const Poly back = Poly::from_roots(found, p.leading());
    EXPECT_LT(max_diff(back.coeffs(), p.coeffs()), 1e-6 * p.max_abs());
  }
}

TEST(Bezout, CoprimeLinear) {
  const auto b = bezout(Poly{0.0, 1.0}, Poly{1.0, -1.0}, kTol);
  EXPECT_LT(max_diff(b.gcd.coeffs(), Poly{1.0}.coeffs()), 1e-15);
  EXPECT_LT(max_diff(b.u.coeffs(), Poly{1.0}.coeffs()), 1e-15);
  EXPECT_LT(max_diff(b.v.coeffs(), Poly{1.0}.coeffs()), 1e-15);
}

TEST(Bezout, ShiftedLinears) {
  const Poly p{-1.0, 1.0}, q{-2.0, 1.0};
  const auto b = bezout(p, q, kTol);
  EXPECT_EQ(b.gcd.degree(), 0);
  // -(z - 1) + (z - 2) = -1, rescaled to the monic gcd 1.
  EXPECT_LT(max_diff(b.u.coeffs(), Poly{1.0}.coeffs()), 1e-14);
  EXPECT_LT(max_diff(b.v.coeffs(), Poly{-1.0}.coeffs()), 1e-14);
  EXPECT_LT(max_diff((b.u * p + b.v * q).coeffs(), Poly{1.0}.coeffs()), 1e-14);
}

TEST(Bezout, EqualInputs) {
  const Poly p{0.0, 0.0, 1.0};
  const auto b = bezout(p, p, kTol);
  EXPECT_LT(max_diff(b.gcd.coeffs(), p.coeffs()), 1e-15);
  EXPECT_LT(max_diff((b.u * p + b.v * p).coeffs(), b.gcd.coeffs()), 1e-15);
}

TEST(Bezout, RandomCoprimePairs) {
  testing::RandomInstances gen(17);
  for (int it = 0; it < 200; ++it) {
    std::vector<Complex> a, c;
    for (int i = 0, n = gen.integer(1, 6); i <= n; ++i) a.push_back(gen.complex());
    for (int i = 0, n = gen.integer(1, 6); i <= n; ++i) c.push_back(gen.complex());
    const Poly p(a), q(c);
    const auto b = bezout(p, q, kTol);
    ASSERT_EQ(b.gcd.degree(), 0);
    const double scale = std::max(p.max_abs(), q.max_abs());
    EXPECT_LT(max_diff((b.u * p + b.v * q).coeffs(), b.gcd.coeffs()), kTol.eps_bezout * scale);
  }
}

}  // namespace
}  // namespace rankone
