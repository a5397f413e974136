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

// Finite sections of U, U_r = U + r(x)phi and K_r in the monomial basis, and
// spectral checks built on them.

#ifndef RANKONE_OPERATORS_HPP_
#define RANKONE_OPERATORS_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rankone/staralg.hpp"

namespace rankone {

/// N x N finite section. Entries with row and column index below window are
/// trusted.
struct TruncatedOperator {
  Eigen::MatrixXcd matrix;
  int N = 0;
  int window = 0;
};

/// Backward shift: ones on the superdiagonal.
Eigen::MatrixXcd shift_matrix(int N);

TruncatedOperator truncate_U_r(const PhiContext& ctx, const RatFunc& r, int N);

/// Column m holds the first N Maclaurin coefficients of r x z^m.
TruncatedOperator K_matrix_via_times(const PhiContext& ctx, const RatFunc& r, int N);

/// T_{zr} T_{conj(phi)} + T_{z T(r)} - T_{zr conj(phi)}. T_{zr} is lower
/// triangular, so the product of the sections is the section of the product
/// and the whole matrix is exact (window = N).
TruncatedOperator K_matrix_via_toeplitz(const PhiContext& ctx, const RatFunc& r, int N);

/// Max column norm, over the leading W x W block, of
///   (I - K_r)(U + s(x)phi) - (U + (r o s)(x)phi)(I - K_r).
double intertwine_residual(const PhiContext& ctx, const RatFunc& r, const RatFunc& s, int N, int W);

enum class Side { forward, adjoint };
const char* to_string(Side s);

/// Chain B f, B^2 f, ..., B^k f for
///   forward: 1 - w U_r = (1 - w U) + r (x) (-conj(w) phi),
///            B h = (z h(z) - w h(w)) / (z - w), f = r, g = -conj(w) phi;
///   adjoint: U_r^* - w = (S - w) + phi (x) r,
///            B h = (h - h(w)) / (z - w), f = phi, g = r.
/// conditions[i-1] is 1 + <B f, g> for i = 1 and <B^i f, g> for i > 1; on the
/// adjoint side (B^(i-1) phi)(w) must vanish as well. breaks_at is the first
/// step whose conditions fail (0 when the whole chain is valid).
struct JordanChain {
  std::vector<RatFunc> vectors;
  std::vector<Complex> conditions;
  int breaks_at = 0;
  int valid_length() const { return breaks_at == 0 ? static_cast<int>(vectors.size()) : breaks_at - 1; }
};

JordanChain jordan_chain(const PhiContext& ctx, const RatFunc& r, Complex w, int k, Side side);

struct KernelDimReport {
  int dim = 0;
  bool indeterminate = false;
  std::string method;                   // "svd" or "exact_chain"
  std::vector<double> singular_values;  // smallest ones, ascending
  double tail_estimate = 0.0;
};

/// dim ker (1 - w U_r)^k (forward, |w| <= 1) or dim ker (U_r^* - w)^k
/// (adjoint, |w| < 1). Interior points use singular values of the finite
/// section (rectangular for the adjoint, so the truncated shift adds no
/// spurious kernel); forward points in the boundary band use exact chains.
/// Throws TruncationUnsound when the truncated chain vectors miss the chain
/// relations by more than sigma_svd / 10.
KernelDimReport kernel_dim(const PhiContext& ctx, const RatFunc& r, Complex w, int k, Side side, int N);

/// Closed form: min(k, ord_w(1 - Gamma_+(.; r))) forward,
/// min(k, ord_w(phi), ord_w(1 - Gamma_-(.; r))) adjoint.
int kernel_dim_formula(const PhiContext& ctx, const RatFunc& r, Complex w, int k, Side side);

}  // namespace rankone

#endif  // RANKONE_OPERATORS_HPP_
