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

#include "rankone/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rankone {

namespace {

Eigen::VectorXcd coeff_vector(const RatFunc& f, int N) {
  const auto c = taylor_coeffs(f, N);
  return Eigen::Map<const Eigen::VectorXcd>(c.data(), N);
}

void require_dimension(int N) {
  if (N < 4) throw Error("truncation dimension must be at least 4");
}

// Section of the Toeplitz matrix with entries g_hat(i - j); fc holds the
// Fourier coefficients for modes -(N-1)..N-1.
Eigen::MatrixXcd toeplitz_section(const std::vector<Complex>& fc, int N) {
  Eigen::MatrixXcd T(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) T(i, j) = fc[static_cast<size_t>(i - j + N - 1)];
  return T;
}

Eigen::MatrixXcd analytic_toeplitz(const RatFunc& f, int N) {
  const auto c = taylor_coeffs(f, N);
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j) T(i, j) = c[static_cast<size_t>(i - j)];
  return T;
}

double h2_norm(const RatFunc& f, const ToleranceConfig& tol) {
  return std::sqrt(std::max(0.0, inner_product(f, f, tol).real()));
}

}  // namespace

Eigen::MatrixXcd shift_matrix(int N) {
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
  for (int i = 0; i + 1 < N; ++i) S(i, i + 1) = 1.0;
  return S;
}

TruncatedOperator truncate_U_r(const PhiContext& ctx, const RatFunc& r, int N) {
  require_dimension(N);
  validate_in_RatD(r, ctx.tol());
  const Eigen::VectorXcd rc = coeff_vector(r, N);
  const Eigen::VectorXcd pc = coeff_vector(ctx.phi(), N);
  return {shift_matrix(N) + rc * pc.adjoint(), N, N};
}

TruncatedOperator K_matrix_via_times(const PhiContext& ctx, const RatFunc& r, int N) {
  require_dimension(N);
  Eigen::MatrixXcd K(N, N);
  for (int m = 0; m < N; ++m) {
    const auto col = times_series(ctx, r, RatFunc::monomial(m), N);
    for (int i = 0; i < N; ++i) K(i, m) = col[static_cast<size_t>(i)];
  }
  return {std::move(K), N, N};
}

TruncatedOperator K_matrix_via_toeplitz(const PhiContext& ctx, const RatFunc& r, int N) {
  require_dimension(N);
  const auto& tol = ctx.tol();
  validate_in_RatD(r, tol);
  const RatFunc zr = mul_z(r, tol);
  Eigen::MatrixXcd Tphibar = Eigen::MatrixXcd::Zero(N, N);
  const auto pc = taylor_coeffs(ctx.phi(), N);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) Tphibar(i, j) = std::conj(pc[static_cast<size_t>(j - i)]);
  const RatFunc mixed = multiply(zr, ctx.phi().conj_reflect(tol), tol);
  const Eigen::MatrixXcd Tmixed = toeplitz_section(fourier_coeffs(mixed, -(N - 1), N - 1, tol), N);
  Eigen::MatrixXcd K = analytic_toeplitz(zr, N) * Tphibar +
                       analytic_toeplitz(gamma_plus(ctx.phi(), r, tol), N) - Tmixed;
  return {std::move(K), N, N};
}

double intertwine_residual(const PhiContext& ctx, const RatFunc& r, const RatFunc& s, int N, int W) {
  if (W < 1 || W > N) throw Error("window must lie in [1, N]");
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
  const Eigen::MatrixXcd IK = I - K_matrix_via_times(ctx, r, N).matrix;
  const Eigen::MatrixXcd Us = truncate_U_r(ctx, s, N).matrix;
  const Eigen::MatrixXcd Urs = truncate_U_r(ctx, circle(ctx, r, s), N).matrix;
  const Eigen::MatrixXcd D = (IK * Us - Urs * IK).topLeftCorner(W, W);
  return D.colwise().norm().maxCoeff();
}

const char* to_string(Side s) { return s == Side::forward ? "forward" : "adjoint"; }

JordanChain jordan_chain(const PhiContext& ctx, const RatFunc& r, Complex w, int k, Side side) {
  const auto& tol = ctx.tol();
  validate_in_RatD(r, tol);
  if (k < 0) throw Error("chain length must be nonnegative");
  if (side == Side::forward && std::abs(w) > 1.0 + tol.delta_boundary)
    throw Error("forward chains need |w| <= 1");
  if (side == Side::adjoint && std::abs(w) >= 1.0 - tol.delta_boundary)
    throw Error("adjoint chains need |w| < 1");

  const RatFunc f = side == Side::forward ? r : ctx.phi();
  const RatFunc g = side == Side::forward ? ctx.phi() * (-std::conj(w)) : r;
  auto B = [&](const RatFunc& h) {
    if (side == Side::forward)
      return multiply(mul_z(h, tol), RatFunc::pole_power(w, 1), tol).without_pole(w, 0.0);
    const RatFunc d = add(h, RatFunc::constant(-h(w)), tol);
    return multiply(d, RatFunc::pole_power(w, 1), tol).without_pole(w, 0.0);
  };
  const double gn = h2_norm(g, tol);
  JordanChain out;
  RatFunc prev = f;
  for (int i = 1; i <= k; ++i) {
    const RatFunc v = B(prev);
    Complex c = inner_product(v, g, tol);
    if (i == 1) c += 1.0;
    const double scale = std::max(1.0, h2_norm(v, tol) * gn);
    bool ok = std::abs(c) <= tol.tau_ord * scale;
    if (side == Side::adjoint) {
      const Complex at_w = prev(w);
      ok = ok && std::abs(at_w) <= tol.tau_ord * std::max(1.0, h2_norm(prev, tol));
    }
    out.vectors.push_back(v);
    out.conditions.push_back(c);
    if (!ok && out.breaks_at == 0) out.breaks_at = i;
    prev = v;
  }
  return out;
}

namespace {

// Single-step matrix and its input dimension.
struct StepMatrix {
  Eigen::MatrixXcd M;
  int cols = 0;
};

StepMatrix step_matrix(const PhiContext& ctx, const RatFunc& r, Complex w, int k, Side side, int N) {
  const Eigen::MatrixXcd Ur = truncate_U_r(ctx, r, N).matrix;
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
  if (side == Side::forward) return {I - w * Ur, N};
  return {Ur.adjoint() - w * I, N - k};
}

}  // namespace

KernelDimReport kernel_dim(const PhiContext& ctx, const RatFunc& r, Complex w, int k, Side side, int N) {
  const auto& tol = ctx.tol();
  require_dimension(N);
  if (k < 0 || k >= N / 2) throw Error("chain length must lie in [0, N/2)");
  KernelDimReport rep;
  if (k == 0) {
    rep.method = "svd";
    return rep;
  }
  const JordanChain chain = jordan_chain(ctx, r, w, k, side);
  if (side == Side::forward && std::abs(w) >= 1.0 - tol.delta_boundary) {
    rep.method = "exact_chain";
    rep.dim = chain.valid_length();
    return rep;
  }

  rep.method = "svd";
  const StepMatrix step = step_matrix(ctx, r, w, k, side, N);
  Eigen::MatrixXcd A = step.M;
  for (int i = 1; i < k; ++i) A = step.M * A;
  A = A.leftCols(step.cols).eval();

  // Truncated chain vectors against the truncated step: M v_1 = 0, M v_i = v_(i-1).
  Eigen::VectorXcd prev = Eigen::VectorXcd::Zero(N);
  for (int i = 0; i < chain.valid_length(); ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
    v.head(step.cols) = coeff_vector(chain.vectors[static_cast<size_t>(i)], step.cols);
    const double nv = v.norm();
    if (nv == 0.0) break;
    rep.tail_estimate = std::max(rep.tail_estimate, (step.M * v - prev).norm() / nv);
    prev = std::move(v);
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  const Eigen::VectorXd sv = svd.singularValues();
  const double thr = tol.sigma_svd;
  int zero = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < thr) ++zero;
  rep.dim = zero;
  const int n = static_cast<int>(sv.size());
  for (int i = std::max(0, n - zero - 3); i < n; ++i) rep.singular_values.push_back(sv(i));
  std::reverse(rep.singular_values.begin(), rep.singular_values.end());
  if (zero < n && sv(n - zero - 1) <= 10.0 * thr) rep.indeterminate = true;

  if (rep.tail_estimate > tol.sigma_svd / 10.0) {
    std::ostringstream os;
    os << "truncated chain vectors at N = " << N << " miss the chain relations by " << rep.tail_estimate;
    throw TruncationUnsound(os.str());
  }
  return rep;
}

int kernel_dim_formula(const PhiContext& ctx, const RatFunc& r, Complex w, int k, Side side) {
  const auto& tol = ctx.tol();
  if (k <= 0) return 0;
  const RatFunc one = RatFunc::constant(1.0);
  if (side == Side::forward) {
    const RatFunc f = add(one, -gamma_plus(ctx.phi(), r, tol), tol);
    return std::min(k, ord_at(f, w, k, tol).ord);
  }
  const int ord_phi = ord_at(ctx.phi(), w, k, tol).ord;
  const RatFunc f = add(one, -gamma_minus_fn(ctx.phi(), r, tol), tol);
  return std::min({k, ord_phi, ord_at(f, w, k, tol).ord});
}

}  // namespace rankone
