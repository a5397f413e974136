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

// Sample points for comparing kernel dimensions against the closed formula.

#ifndef RANKONE_TESTS_SPECTRAL_GRID_HPP_
#define RANKONE_TESTS_SPECTRAL_GRID_HPP_

#include <vector>

#include "random_instances.hpp"
#include "rankone/errors.hpp"
#include "rankone/hardy.hpp"
#include "rankone/staralg.hpp"

namespace rankone::testing {

inline void add_interior_zeros(const RatFunc& f, const ToleranceConfig& tol, std::vector<Complex>& out) {
  try {
    for (const auto& z : zeros_in_closed_disc(f, tol))
      if (z.region == Region::interior) out.push_back(z.location);
  } catch (const IdenticallyZero&) {
  }
}

/// Interior zeros of 1 - Gamma_+(.; r), of phi and of 1 - Gamma_-(.; r), then
/// `extra` random points of modulus at most 0.95.
inline std::vector<Complex> spectral_grid(const PhiContext& ctx, const RatFunc& r, RandomInstances& gen, int extra = 5) {
  const ToleranceConfig& tol = ctx.tol();
  const RatFunc one = RatFunc::constant(1.0);
  std::vector<Complex> pts;
  add_interior_zeros(one - gamma_plus(ctx.phi(), r, tol), tol, pts);
  for (const auto& z : ctx.zeros()) pts.push_back(z.a);
  add_interior_zeros(one - gamma_minus_fn(ctx.phi(), r, tol), tol, pts);
  for (int i = 0; i < extra; ++i) pts.push_back(gen.in_disc(0.95));
  return pts;
}

}  // namespace rankone::testing

#endif  // RANKONE_TESTS_SPECTRAL_GRID_HPP_
