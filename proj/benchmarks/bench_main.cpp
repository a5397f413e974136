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

#include <benchmark/benchmark.h>

#include "random_instances.hpp"
#include "rankone/operators.hpp"

namespace rankone {
namespace {

struct Instance {
  PhiContext ctx;
  RatFunc r, s;
};

Instance make(std::uint64_t seed) {
  testing::RandomInstances gen(seed);
  auto ctx = PhiContext::build(gen.phi_with_zeros({{gen.in_disc(0.6), 2}}));
  RatFunc r = gen.rat();
  RatFunc s = circle(ctx, r, gen.circle_invertible(ctx));
  return {std::move(ctx), std::move(r), std::move(s)};
}

void BM_Roots(benchmark::State& state) {
  testing::RandomInstances gen(1);
  std::vector<Complex> rs;
  for (int i = 0; i < state.range(0); ++i) rs.push_back(gen.complex(2.0));
  const Poly p = Poly::from_roots(rs);
  const ToleranceConfig tol;
  for (auto _ : state) benchmark::DoNotOptimize(roots(p, tol));
}
BENCHMARK(BM_Roots)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildContext(benchmark::State& state) {
  testing::RandomInstances gen(2);
  const RatFunc phi = gen.phi_with_zeros({{0.3, 2}, {Complex(-0.2, 0.5), 1}});
  for (auto _ : state) benchmark::DoNotOptimize(PhiContext::build(phi));
}
BENCHMARK(BM_BuildContext);

void BM_Times(benchmark::State& state) {
  const auto in = make(3);
  for (auto _ : state) benchmark::DoNotOptimize(times(in.ctx, in.r, in.s));
}
BENCHMARK(BM_Times);

void BM_TimesViaKernels(benchmark::State& state) {
  const auto in = make(3);
  for (auto _ : state) benchmark::DoNotOptimize(times_via_kernels(in.ctx, in.r, in.s));
}
BENCHMARK(BM_TimesViaKernels);

void BM_GammaMinus(benchmark::State& state) {
  const auto in = make(4);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_minus_fn(in.ctx.phi(), in.r, in.ctx.tol()));
}
BENCHMARK(BM_GammaMinus);

void BM_Similar(benchmark::State& state) {
  const auto in = make(5);
  for (auto _ : state) benchmark::DoNotOptimize(similar(in.ctx, in.r, in.s));
}
BENCHMARK(BM_Similar);

void BM_KMatrix(benchmark::State& state) {
  const auto in = make(6);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(K_matrix_via_times(in.ctx, in.r, N));
}
BENCHMARK(BM_KMatrix)->Arg(32)->Arg(64)->Arg(128);

void BM_KernelDim(benchmark::State& state) {
  const auto in = make(7);
  const int N = static_cast<int>(state.range(0));
  const Complex w = in.ctx.zeros().front().a;
  for (auto _ : state) benchmark::DoNotOptimize(kernel_dim(in.ctx, in.r, w, 2, Side::adjoint, N));
}
BENCHMARK(BM_KernelDim)->Arg(64)->Arg(96)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rankone

BENCHMARK_MAIN();
