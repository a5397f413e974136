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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace rankone {

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { drop_exact_zeros(); }

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { drop_exact_zeros(); }

Poly Poly::constant(Complex c) { return Poly({c}); }

Poly Poly::monomial(int degree, Complex c) {
  std::vector<Complex> v(static_cast<size_t>(degree) + 1, 0.0);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const Complex> roots, Complex lead) {
  std::vector<Complex> v{lead};
  for (const Complex& r : roots) {
    v.push_back(0.0);
    for (size_t k = v.size() - 1; k > 0; --k) v[k] = v[k - 1] - r * v[k];
    v[0] = -r * v[0];
  }
  return Poly(std::move(v));
}

void Poly::drop_exact_zeros() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex Poly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<size_t>(k)];
}

Complex Poly::leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

double Poly::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Poly::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> v(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Poly(std::move(v));
}

Poly Poly::taylor_shift(Complex at) const {
  // Repeated synthetic division by (z - at).
  std::vector<Complex> v = coeffs_;
  const size_t n = v.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t k = n - 1; k > i; --k) v[k - 1] += at * v[k];
  }
  return Poly(std::move(v));
}

Poly Poly::conj_coeffs() const {
  std::vector<Complex> v(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), v.begin(), [](Complex c) { return std::conj(c); });
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw DivisionByZero();
  return *this * (1.0 / leading());
}

Poly& Poly::trim(double rel_eps) {
  const double cut = rel_eps * max_abs();
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
  return *this;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  drop_exact_zeros();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  drop_exact_zeros();
  return *this;
}

Poly& Poly::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  drop_exact_zeros();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, double rel_eps) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Complex> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<Complex> quo(static_cast<size_t>(a.degree() - db) + 1, 0.0);
  const Complex lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Complex q = rem[static_cast<size_t>(k + db)] / lead;
    quo[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * b[j];
    rem[static_cast<size_t>(k + db)] = 0.0;
  }
  rem.resize(static_cast<size_t>(db));
  Poly r(std::move(rem));
  const double cut = rel_eps * std::max(a.max_abs(), 1e-300);
  while (!r.is_zero() && std::abs(r.leading()) <= cut) {
    std::vector<Complex> v(r.coeffs().begin(), r.coeffs().end() - 1);
    r = Poly(std::move(v));
  }
  return {Poly(std::move(quo)), r};
}

const char* to_string(Region r) {
  switch (r) {
    case Region::interior: return "interior";
    case Region::boundary: return "boundary";
    case Region::exterior: return "exterior";
  }
  return "?";
}

Region classify(Complex z, const ToleranceConfig& tol) {
  const double m = std::abs(z);
  if (m < 1.0 - tol.delta_boundary) return Region::interior;
  if (std::abs(m - 1.0) <= tol.delta_boundary) return Region::boundary;
  return Region::exterior;
}

std::vector<Complex> companion_roots(const Poly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  if (n == 1) return {-p[0] / p[1]};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  const Complex lead = p.leading();
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, /*computeEigenvectors=*/false);
  std::vector<Complex> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return out;
}

namespace {

// Newton on q, accepted only while it stays within radius of the start.
Complex polish(const Poly& q, Complex z, double radius) {
  const Poly dq = q.derivative();
  Complex best = z;
  double best_val = std::abs(q.eval(z));
  for (int it = 0; it < 8 && best_val > 0.0; ++it) {
    const Complex d = dq.eval(z);
    if (d == Complex(0.0)) break;
    z -= q.eval(z) / d;
    if (std::abs(z - best) > radius) break;
    const double v = std::abs(q.eval(z));
    if (!(v < best_val)) break;
    best = z;
    best_val = v;
  }
  return best;
}

}  // namespace

namespace {

struct Cluster {
  std::vector<Complex> members;
  Complex location;
};

Complex mean(const std::vector<Complex>& v) {
  Complex s = 0.0;
  for (Complex z : v) s += z;
  return s / static_cast<double>(v.size());
}

// Location of a cluster: the mean, refined as the simple root of p^(m-1).
Complex refine(const Poly& p, const std::vector<Complex>& members, const ToleranceConfig& tol) {
  const Complex c = mean(members);
  double spread = 0.0;
  for (Complex z : members) spread = std::max(spread, std::abs(z - c));
  Poly q = p;
  for (size_t k = 1; k < members.size(); ++k) q = q.derivative();
  return polish(q, c, std::max(tol.delta_cluster * std::max(1.0, std::abs(c)), 2.0 * spread));
}

// z is an m-fold root of some polynomial within relative coefficient distance
// eps_zero of p: every Taylor coefficient of p at z below m is at rounding
// level for that perturbation size.
bool is_multiple_root(const Poly& p, Complex z, int m, const ToleranceConfig& tol) {
  const Poly shifted = p.taylor_shift(z);
  Poly absp;
  {
    std::vector<Complex> a;
    for (int k = 0; k <= p.degree(); ++k) a.push_back(std::abs(p[k]));
    absp = Poly(std::move(a));
  }
  const Poly bound = absp.taylor_shift(std::abs(z));
  for (int j = 0; j < m; ++j)
    if (std::abs(shifted[j]) > tol.eps_zero * std::abs(bound[j])) return false;
  return true;
}

}  // namespace

std::vector<ZeroDatum> roots(const Poly& p, const ToleranceConfig& tol) {
  if (p.is_zero()) throw IdenticallyZero();
  const std::vector<Complex> raw = companion_roots(p);
  const size_t n = raw.size();
  // Single-linkage clustering at delta_cluster.
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const double radius = tol.delta_cluster * std::max(1.0, std::abs(raw[i]));
      if (std::abs(raw[i] - raw[j]) <= radius) parent[find(i)] = find(j);
    }
  std::vector<Cluster> clusters;
  std::vector<size_t> seen;
  for (size_t i = 0; i < n; ++i) {
    const size_t root = find(i);
    if (std::find(seen.begin(), seen.end(), root) != seen.end()) continue;
    seen.push_back(root);
    Cluster c;
    for (size_t j = 0; j < n; ++j)
      if (find(j) == root) c.members.push_back(raw[j]);
    c.location = refine(p, c.members, tol);
    clusters.push_back(std::move(c));
  }
  // A multiple root perturbed by rounding splits by about eps^(1/m), which
  // can exceed delta_cluster. Nearby clusters are merged when the merged
  // point passes the multiple-root test.
  for (bool merged = true; merged;) {
    merged = false;
    std::vector<std::pair<double, std::pair<size_t, size_t>>> cand;
    for (size_t i = 0; i < clusters.size(); ++i)
      for (size_t j = i + 1; j < clusters.size(); ++j) {
        const double d = std::abs(clusters[i].location - clusters[j].location);
        if (d <= 1e-3 * std::max(1.0, std::abs(clusters[i].location))) cand.push_back({d, {i, j}});
      }
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [d, ij] : cand) {
      std::vector<Complex> members = clusters[ij.first].members;
      members.insert(members.end(), clusters[ij.second].members.begin(), clusters[ij.second].members.end());
      const Complex loc = refine(p, members, tol);
      if (!is_multiple_root(p, loc, static_cast<int>(members.size()), tol)) continue;
      clusters[ij.first] = {std::move(members), loc};
      clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(ij.second));
      merged = true;
      break;
    }
  }
  std::vector<ZeroDatum> out;
  for (const auto& c : clusters)
    out.push_back({c.location, static_cast<int>(c.members.size()), classify(c.location, tol)});
  std::sort(out.begin(), out.end(), [](const ZeroDatum& a, const ZeroDatum& b) {
    if (std::abs(a.location) != std::abs(b.location)) return std::abs(a.location) < std::abs(b.location);
    return std::arg(a.location) < std::arg(b.location);
  });
  return out;
}

BezoutResult bezout(const Poly& p, const Poly& q, const ToleranceConfig& tol) {
  if (p.is_zero() && q.is_zero()) throw DivisionByZero();
  const double scale = std::max(p.max_abs(), q.max_abs());
  Poly r0 = p, r1 = q;
  Poly s0 = Poly::constant(1.0), s1;
  Poly t0, t1 = Poly::constant(1.0);
  while (!r1.is_zero() && r1.max_abs() > tol.eps_bezout * scale) {
    auto [quo, rem] = divmod(r0, r1, tol.eps_bezout);
    Poly s2 = s0 - quo * s1;
    Poly t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Complex lead = r0.leading();
  BezoutResult out{r0 * (1.0 / lead), s0 * (1.0 / lead), t0 * (1.0 / lead)};
  const Poly residual = out.u * p + out.v * q - out.gcd;
  const double size = std::max({1.0, out.u.max_abs() * p.max_abs(), out.v.max_abs() * q.max_abs()});
  if (residual.max_abs() > tol.eps_bezout * size)
    throw IllConditioned("Bezout residual " + std::to_string(residual.max_abs()) + " exceeds eps_bezout");
  return out;
}

}  // namespace rankone
