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

// Random rational data for property tests.
//
// Policy: poles are simple with modulus in [1.2, 3]; r has one or two poles
// and a polynomial part of degree at most 2 (numerator degree <= 4); phi has
// at most two interior zeros of order at most 2, kept at least 0.2 apart and
// inside |z| <= 0.8.

#ifndef RANKONE_TESTS_RANDOM_INSTANCES_HPP_
#define RANKONE_TESTS_RANDOM_INSTANCES_HPP_

#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "rankone/staralg.hpp"

namespace rankone::testing {

class RandomInstances {
 public:
  explicit RandomInstances(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Real and imaginary parts uniform in [-s, s].
  Complex complex(double s = 1.0) { return {uniform(-s, s), uniform(-s, s)}; }

  Complex in_disc(double radius) { return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), angle()); }

  Complex pole() { return std::polar(uniform(1.2, 3.0), angle()); }

  RatFunc rat(double scale = 1.0) {
    std::vector<PoleTerm> terms;
    const int np = integer(1, 2);
    for (int i = 0; i < np; ++i) terms.push_back({pole(), {complex(scale)}});
    std::vector<Complex> poly;
    const int deg = integer(0, 2);
    for (int i = 0; i <= deg; ++i) poly.push_back(complex(scale));
    return RatFunc(Poly(std::move(poly)), std::move(terms));
  }

  /// Interior zeros (location, order) for phi.
  std::vector<std::pair<Complex, int>> zero_pattern(int max_zeros = 2) {
    std::vector<std::pair<Complex, int>> zs;
    const int nz = integer(0, max_zeros);
    while (static_cast<int>(zs.size()) < nz) {
      const Complex a = in_disc(0.8);
      bool far = true;
      for (const auto& z : zs) far = far && std::abs(z.first - a) >= 0.2;
      if (far) zs.push_back({a, integer(1, 2)});
    }
    return zs;
  }

  RatFunc phi_with_zeros(const std::vector<std::pair<Complex, int>>& zs) {
    std::vector<Complex> roots;
    for (const auto& [a, m] : zs)
      for (int k = 0; k < m; ++k) roots.push_back(a);
    if (roots.size() < 4 && integer(0, 1) == 1) roots.push_back(pole());
    const Poly num = Poly::from_roots(roots, std::polar(uniform(0.5, 1.5), angle()));
    std::vector<std::pair<Complex, int>> poles;
    const int np = integer(1, 2);
    for (int i = 0; i < np; ++i) poles.push_back({pole(), 1});
    return RatFunc::from_factored(num, 1.0, poles, ToleranceConfig{});
  }

  RatFunc phi() { return phi_with_zeros(zero_pattern()); }

  /// A random t with is_circle_invertible(ctx, t); draws shrink until one
  /// qualifies.
  RatFunc circle_invertible(const PhiContext& ctx) {
    double scale = 1.0;
    for (int attempt = 0;; ++attempt) {
      RatFunc t = rat(scale);
      if (is_circle_invertible(ctx, t).invertible) return t;
      if (attempt % 4 == 3) scale *= 0.7;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

  std::mt19937_64 rng_;
};

}  // namespace rankone::testing

#endif  // RANKONE_TESTS_RANDOM_INSTANCES_HPP_
