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

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rankone {

Complex inner_product(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol) {
  validate_in_RatD(g, tol);
  Complex acc = 0.0;
  const Poly& pg = g.poly_part();
  if (!pg.is_zero()) {
    const auto fc = taylor_coeffs(f, pg.degree() + 1);
    for (int n = 0; n <= pg.degree(); ++n) acc += fc[static_cast<size_t>(n)] * std::conj(pg[n]);
  }
  for (const auto& t : g.pole_terms()) {
    const Complex a = node_of_pole(t.pole);
    const auto c = kappa_coords_from_pole(t.pole, t.coeffs);
    const auto fa = f.taylor_at(a, static_cast<int>(c.size()));
    for (size_t n = 0; n < c.size(); ++n) acc += fa[n] * std::conj(c[n]);
  }
  return acc;
}

namespace {

std::vector<Complex> apply_block(const std::vector<Complex>& phi_taylor, const std::vector<Complex>& c) {
  std::vector<Complex> d(c.size(), 0.0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t n = i; n < c.size(); ++n) d[i] += std::conj(phi_taylor[n - i]) * c[n];
  return d;
}

}  // namespace

RatFunc toeplitz_conj_apply(const RatFunc& phi, const RatFunc& r, const ToleranceConfig& tol) {
  validate_in_RatD(r, tol);
  RatFunc out;
  const Poly& pr = r.poly_part();
  if (!pr.is_zero()) {
    const std::vector<Complex> c(pr.coeffs().begin(), pr.coeffs().end());
    out = add(out, from_kappa(0.0, apply_block(taylor_coeffs(phi, pr.degree() + 1), c)), tol);
  }
  for (const auto& t : r.pole_terms()) {
    const Complex a = node_of_pole(t.pole);
    const auto c = kappa_coords_from_pole(t.pole, t.coeffs);
    const auto d = apply_block(phi.taylor_at(a, static_cast<int>(c.size())), c);
    out = add(out, from_kappa(a, d), tol);
  }
  return out;
}

RatFunc gamma_plus(const RatFunc& phi, const RatFunc& r, const ToleranceConfig& tol) {
  return mul_z(toeplitz_conj_apply(phi, r, tol), tol);
}

RatFunc gamma_minus_fn(const RatFunc& phi, const RatFunc& r, const ToleranceConfig& tol) {
  validate_in_RatD(r, tol);
  RatFunc out;
  auto block = [&](Complex a, const std::vector<Complex>& c) {
    std::vector<Complex> cc(c.size());
    std::transform(c.begin(), c.end(), cc.begin(), [](Complex x) { return -std::conj(x); });
    while (!cc.empty() && cc.back() == Complex(0.0)) cc.pop_back();
    if (cc.empty()) return;
    const RatFunc h({}, {PoleTerm{a, std::move(cc)}});
    out = add(out, multiply(phi, h, tol).without_pole(a, 0.0), tol);
  };
  const Poly& pr = r.poly_part();
  if (!pr.is_zero()) block(0.0, std::vector<Complex>(pr.coeffs().begin(), pr.coeffs().end()));
  for (const auto& t : r.pole_terms()) block(node_of_pole(t.pole), kappa_coords_from_pole(t.pole, t.coeffs));
  return out;
}

double sup_norm_circle(const RatFunc& f, int samples) {
  double m = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / samples);
    m = std::max(m, std::abs(f(z)));
  }
  return m;
}

OrdReport ord_at(const RatFunc& f, Complex w, int cap, const ToleranceConfig& tol) {
  for (const auto& t : f.pole_terms())
    if (std::abs(t.pole - w) <= std::max(tol.delta_boundary, tol.delta_cluster * std::abs(w))) throw PoleAt(w);
  const double scale = std::max(sup_norm_circle(f), f.scale());
  const auto tc = f.taylor_at(w, cap + 1);
  OrdReport rep{w, cap + 1, true, {}};
  for (int n = 0; n <= cap; ++n) {
    rep.taylor.push_back(tc[static_cast<size_t>(n)]);
    if (std::abs(tc[static_cast<size_t>(n)]) > tol.tau_ord * scale) {
      rep.ord = n;
      rep.capped = false;
      break;
    }
  }
  return rep;
}

namespace {

Complex newton_polish(const RatFunc& f, Complex z, double radius) {
  const RatFunc df = f.derivative();
  Complex best = z;
  double best_val = std::abs(f(z));
  for (int it = 0; it < 10 && best_val > 0.0; ++it) {
    const Complex d = df(z);
    if (d == Complex(0.0)) break;
    z -= f(z) / d;
    if (std::abs(z - best) > radius) break;
    const double v = std::abs(f(z));
    if (!(v < best_val)) break;
    best = z;
    best_val = v;
  }
  return best;
}

}  // namespace

std::vector<ZeroDatum> zeros_near_disc(const RatFunc& f, double margin, const ToleranceConfig& tol) {
  Poly num = f.numerator();
  num.trim(tol.eps_zero);
  if (num.is_zero() || f.scale() == 0.0) throw IdenticallyZero();
  std::vector<ZeroDatum> out;
  for (ZeroDatum z : roots(num, tol)) {
    if (std::abs(z.location) > 1.0 + margin + tol.delta_cluster) continue;
    RatFunc g = f;
    for (int k = 1; k < z.multiplicity; ++k) g = g.derivative();
    z.location = newton_polish(g, z.location, tol.delta_cluster * std::max(1.0, std::abs(z.location)));
    z.region = classify(z.location, tol);
    if (std::abs(z.location) <= 1.0 + margin) out.push_back(z);
  }
  return out;
}

std::vector<ZeroDatum> zeros_in_closed_disc(const RatFunc& f, const ToleranceConfig& tol) {
  return zeros_near_disc(f, tol.delta_boundary, tol);
}

}  // namespace rankone
