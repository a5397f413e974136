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

// Hardy-space computations on rational data: the H^2 pairing, the co-analytic
// Toeplitz operator, the functions Gamma_+ and Gamma_- of a symbol phi, and
// zero-order analysis.

#ifndef RANKONE_HARDY_HPP_
#define RANKONE_HARDY_HPP_

#include <vector>

#include "rankone/ratfun.hpp"

namespace rankone {

/// <f, g> = sum_n f^(n) conj(g^(n)), computed through the kernel expansion of
/// g: <f, k_a^(n)> = f^(n)(a). Conjugate-linear in g.
Complex inner_product(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol);

/// T_{conj(phi)} r, blockwise on the kernel expansion of r:
///   T(kappa_a^n) = sum_j conj(phi_j(a)) kappa_a^(n-j),
/// where phi_j(a) is the j-th Taylor coefficient of phi at a.
RatFunc toeplitz_conj_apply(const RatFunc& phi, const RatFunc& r, const ToleranceConfig& tol);

/// z T_{conj(phi)} r; its value at w is Gamma_+(w; r).
RatFunc gamma_plus(const RatFunc& phi, const RatFunc& r, const ToleranceConfig& tol);

/// Gamma_-(w; r) = <phi/(w - z), r> as a rational function of w.
///
/// For r = sum c_{a,n} kappa_a^n,
///   Gamma_-(w; r) = -sum conj(c_{a,n}) (phi(w) - T_n[phi,a](w)) / (w - a)^(n+1)
/// with T_n[phi,a] the degree-n Taylor polynomial of phi at a. Each quotient
/// is the product phi / (w - a)^(n+1) with its principal part at a removed,
/// so no cancellation is involved. Conjugate-linear in r.
RatFunc gamma_minus_fn(const RatFunc& phi, const RatFunc& r, const ToleranceConfig& tol);

struct OrdReport {
  Complex point;
  int ord = 0;
  bool capped = false;               // every tested coefficient vanished; ord = cap + 1
  std::vector<Complex> taylor;       // f^(n)(w)/n!, n = 0..min(ord, cap)
};

/// Order of the zero of f at w, testing Taylor coefficients up to index cap
/// against tau_ord times the sup of |f| on the unit circle.
OrdReport ord_at(const RatFunc& f, Complex w, int cap, const ToleranceConfig& tol);

/// Zeros of f in the closed disc (interior and boundary band), clustered.
/// f must not be identically zero.
std::vector<ZeroDatum> zeros_in_closed_disc(const RatFunc& f, const ToleranceConfig& tol);

/// Zeros of f with modulus <= 1 + margin.
std::vector<ZeroDatum> zeros_near_disc(const RatFunc& f, double margin, const ToleranceConfig& tol);

/// max |f| over equispaced sample points of the unit circle.
double sup_norm_circle(const RatFunc& f, int samples = 256);

}  // namespace rankone

#endif  // RANKONE_HARDY_HPP_
