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

#include "rankone/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numeric_util.hpp"

namespace rankone {

namespace {

// Taylor coefficients at z0 of (z - q)^(-j), count terms.
void add_pole_taylor(Complex q, int j, Complex c, Complex z0, std::vector<Complex>& out) {
  const Complex inv = 1.0 / (z0 - q);
  Complex t = c * std::pow(inv, j);
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] += t;
    t *= -static_cast<double>(j + static_cast<int>(k)) / static_cast<double>(k + 1) * inv;
  }
}

// Coefficients of z^-k (k = 1..K, stored at index k-1) in the expansion at
// infinity of all principal parts of f.
std::vector<Complex> infinity_coeffs(const RatFunc& f, int K) {
  std::vector<Complex> g(static_cast<size_t>(std::max(K, 0)), 0.0);
  for (const PoleTerm& t : f.pole_terms()) {
    for (int j = 1; j <= t.order(); ++j) {
      const Complex c = t.coeffs[static_cast<size_t>(j - 1)];
      Complex pw = 1.0;
      for (int k = j; k <= K; ++k) {
        g[static_cast<size_t>(k - 1)] += c * binomial(k - 1, j - 1) * pw;
        pw *= t.pole;
      }
    }
  }
  return g;
}

// Nonnegative-power part of P(z) * sum_k g_k z^-k.
Poly plus_part(const Poly& p, const std::vector<Complex>& g) {
  const int d = p.degree();
  if (d < 1) return {};
  std::vector<Complex> v(static_cast<size_t>(d), 0.0);
  for (int n = 0; n < d; ++n)
    for (int k = 1; n + k <= d; ++k) v[static_cast<size_t>(n)] += p[n + k] * g[static_cast<size_t>(k - 1)];
  return Poly(std::move(v));
}

double pole_weight(Complex p) { return 1.0 / std::max(std::abs(std::abs(p) - 1.0), 1e-3); }

// Entry M_{j,n} of kappa_w^n = sum_j M_{j,n} (z - p)^-j with p = 1/conj(w).
Complex kappa_entry(Complex p, int j, int n) {
  const double sign = ((n + 1) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(p, n + j) * binomial(n, n + 1 - j);
}

}  // namespace

RatFunc::RatFunc(Poly poly, std::vector<PoleTerm> poles) : poly_(std::move(poly)) {
  for (auto& t : poles) absorb(std::move(t), 0.0);
}

RatFunc RatFunc::constant(Complex c) { return RatFunc(Poly::constant(c), {}); }

RatFunc RatFunc::polynomial(Poly p) { return RatFunc(std::move(p), {}); }

RatFunc RatFunc::monomial(int degree, Complex c) { return RatFunc(Poly::monomial(degree, c), {}); }

RatFunc RatFunc::pole_power(Complex pole, int order, Complex c) {
  std::vector<Complex> coeffs(static_cast<size_t>(order), 0.0);
  coeffs.back() = c;
  return RatFunc({}, {PoleTerm{pole, std::move(coeffs)}});
}

void RatFunc::absorb(PoleTerm term, double merge_rel) {
  if (term.coeffs.empty()) return;
  for (PoleTerm& t : poles_) {
    const Complex delta = term.pole - t.pole;
    if (std::abs(delta) > merge_rel * std::max(1.0, std::abs(t.pole))) continue;
    if (delta == Complex(0.0)) {
      if (t.coeffs.size() < term.coeffs.size()) t.coeffs.resize(term.coeffs.size(), 0.0);
      for (size_t j = 0; j < term.coeffs.size(); ++j) t.coeffs[j] += term.coeffs[j];
      return;
    }
    // (z - p - delta)^-j = sum_k C(j+k-1,k) delta^k (z - p)^(-j-k)
    for (int j = 1; j <= term.order(); ++j) {
      const Complex c = term.coeffs[static_cast<size_t>(j - 1)];
      Complex add = c;
      for (int k = 0; k < 12; ++k) {
        const size_t idx = static_cast<size_t>(j + k - 1);
        if (t.coeffs.size() <= idx) t.coeffs.resize(idx + 1, 0.0);
        t.coeffs[idx] += add;
        add *= delta * static_cast<double>(j + k) / static_cast<double>(k + 1);
        if (std::abs(add) <= 1e-18 * std::abs(c)) break;
      }
    }
    return;
  }
  poles_.push_back(std::move(term));
}

RatFunc RatFunc::from_factored(const Poly& num, Complex lead,
                               std::span<const std::pair<Complex, int>> factors,
                               const ToleranceConfig& tol) {
  if (lead == Complex(0.0)) throw DivisionByZero();
  std::vector<Complex> roots_expanded;
  for (const auto& [r, m] : factors)
    for (int k = 0; k < m; ++k) roots_expanded.push_back(r);
  const Poly den = Poly::from_roots(roots_expanded, lead);
  Poly quo = divmod(num, den).first;

  std::vector<PoleTerm> terms;
  for (size_t i = 0; i < factors.size(); ++i) {
    const auto [r, m] = factors[i];
    // Taylor at r of num / (lead * prod_{other} (z - q)^mq)
    Poly shifted = num.taylor_shift(r);
    std::vector<Complex> h(static_cast<size_t>(m), 0.0);
    for (int k = 0; k < m; ++k) h[static_cast<size_t>(k)] = shifted[k] / lead;
    for (size_t o = 0; o < factors.size(); ++o) {
      if (o == i) continue;
      std::vector<Complex> series(static_cast<size_t>(m), 0.0);
      add_pole_taylor(factors[o].first, factors[o].second, 1.0, r, series);
      std::vector<Complex> prod(static_cast<size_t>(m), 0.0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; a + b < m; ++b)
          prod[static_cast<size_t>(a + b)] += h[static_cast<size_t>(a)] * series[static_cast<size_t>(b)];
      h = std::move(prod);
    }
    PoleTerm t{r, std::vector<Complex>(static_cast<size_t>(m))};
    for (int j = 1; j <= m; ++j) t.coeffs[static_cast<size_t>(j - 1)] = h[static_cast<size_t>(m - j)];
    terms.push_back(std::move(t));
  }
  RatFunc f(std::move(quo), std::move(terms));
  f.normalize(tol);
  return f;
}

RatFunc RatFunc::from_num_den(const Poly& num, const Poly& den, const ToleranceConfig& tol) {
  Poly d = den;
  d.trim(tol.eps_zero);
  if (d.is_zero()) throw DivisionByZero();
  std::vector<std::pair<Complex, int>> factors;
  for (const ZeroDatum& z : roots(d, tol)) factors.emplace_back(z.location, z.multiplicity);
  Poly n = num;
  n.trim(tol.eps_zero);
  return from_factored(n, d.leading(), factors, tol);
}

Poly RatFunc::denominator() const {
  std::vector<Complex> rs;
  for (const auto& t : poles_)
    for (int k = 0; k < t.order(); ++k) rs.push_back(t.pole);
  return Poly::from_roots(rs);
}

Poly RatFunc::numerator() const {
  Poly num = poly_ * denominator();
  for (size_t i = 0; i < poles_.size(); ++i) {
    std::vector<Complex> others;
    for (size_t o = 0; o < poles_.size(); ++o)
      if (o != i)
        for (int k = 0; k < poles_[o].order(); ++k) others.push_back(poles_[o].pole);
    const Poly rest = Poly::from_roots(others);
    const PoleTerm& t = poles_[i];
    for (int j = 1; j <= t.order(); ++j) {
      std::vector<Complex> mine(static_cast<size_t>(t.order() - j), t.pole);
      num += Poly::from_roots(mine, t.coeffs[static_cast<size_t>(j - 1)]) * rest;
    }
  }
  return num;
}

Complex RatFunc::operator()(Complex z) const {
  Complex v = poly_.eval(z);
  for (const auto& t : poles_) {
    const Complex inv = 1.0 / (z - t.pole);
    Complex pw = inv;
    for (const Complex& c : t.coeffs) {
      v += c * pw;
      pw *= inv;
    }
  }
  return v;
}

std::vector<Complex> RatFunc::taylor_at(Complex z0, int count) const {
  std::vector<Complex> out(static_cast<size_t>(std::max(count, 0)), 0.0);
  if (count <= 0) return out;
  const Poly shifted = z0 == Complex(0.0) ? poly_ : poly_.taylor_shift(z0);
  for (int k = 0; k < count && k <= shifted.degree(); ++k) out[static_cast<size_t>(k)] = shifted[k];
  for (const auto& t : poles_)
    for (int j = 1; j <= t.order(); ++j) add_pole_taylor(t.pole, j, t.coeffs[static_cast<size_t>(j - 1)], z0, out);
  return out;
}

Complex RatFunc::derivative_at(Complex z0, int n) const {
  return taylor_at(z0, n + 1)[static_cast<size_t>(n)] * factorial(n);
}

RatFunc RatFunc::derivative() const {
  std::vector<PoleTerm> terms;
  for (const auto& t : poles_) {
    PoleTerm d{t.pole, std::vector<Complex>(static_cast<size_t>(t.order() + 1), 0.0)};
    for (int j = 1; j <= t.order(); ++j)
      d.coeffs[static_cast<size_t>(j)] = -static_cast<double>(j) * t.coeffs[static_cast<size_t>(j - 1)];
    terms.push_back(std::move(d));
  }
  return RatFunc(poly_.derivative(), std::move(terms));
}

int RatFunc::find_pole(Complex p, double radius) const {
  for (size_t i = 0; i < poles_.size(); ++i)
    if (std::abs(poles_[i].pole - p) <= radius) return static_cast<int>(i);
  return -1;
}

double RatFunc::min_pole_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& t : poles_) m = std::min(m, std::abs(t.pole));
  return m;
}

double RatFunc::scale() const {
  double s = poly_.max_abs();
  for (const auto& t : poles_) {
    const double w = pole_weight(t.pole);
    double wj = w;
    for (const auto& c : t.coeffs) {
      s = std::max(s, std::abs(c) * wj);
      wj *= w;
    }
  }
  return s;
}

RatFunc& RatFunc::normalize(const ToleranceConfig& tol) {
  std::vector<PoleTerm> old = std::move(poles_);
  poles_.clear();
  for (auto& t : old) absorb(std::move(t), tol.delta_cluster);
  const double cut = tol.eps_zero * scale();
  std::vector<Complex> pc(poly_.coeffs().begin(), poly_.coeffs().end());
  while (!pc.empty() && std::abs(pc.back()) <= cut) pc.pop_back();
  poly_ = Poly(std::move(pc));
  std::vector<PoleTerm> kept;
  for (auto& t : poles_) {
    const double w = pole_weight(t.pole);
    while (!t.coeffs.empty() && std::abs(t.coeffs.back()) * std::pow(w, t.order()) <= cut) t.coeffs.pop_back();
    if (!t.coeffs.empty()) kept.push_back(std::move(t));
  }
  poles_ = std::move(kept);
  return *this;
}

RatFunc RatFunc::without_pole(Complex p, double radius) const {
  RatFunc out = *this;
  out.poles_.erase(std::remove_if(out.poles_.begin(), out.poles_.end(),
                                  [&](const PoleTerm& t) { return std::abs(t.pole - p) <= radius; }),
                   out.poles_.end());
  return out;
}

RatFunc RatFunc::conj_reflect(const ToleranceConfig& tol) const {
  RatFunc out = RatFunc::constant(std::conj(poly_[0]));
  if (poly_.degree() >= 1) {
    PoleTerm at_zero{0.0, std::vector<Complex>(static_cast<size_t>(poly_.degree()), 0.0)};
    for (int k = 1; k <= poly_.degree(); ++k) at_zero.coeffs[static_cast<size_t>(k - 1)] = std::conj(poly_[k]);
    out = add(out, RatFunc({}, {std::move(at_zero)}), tol);
  }
  for (const auto& t : poles_) {
    for (int j = 1; j <= t.order(); ++j) {
      const Complex c = std::conj(t.coeffs[static_cast<size_t>(j - 1)]);
      if (t.pole == Complex(0.0)) {
        out = add(out, RatFunc::monomial(j, c), tol);
        continue;
      }
      const Complex pb = std::conj(t.pole);
      const std::pair<Complex, int> factor{1.0 / pb, j};
      out = add(out,
                RatFunc::from_factored(Poly::monomial(j, c * std::pow(-pb, -j)), 1.0,
                                       std::span<const std::pair<Complex, int>>(&factor, 1), tol),
                tol);
    }
  }
  return out;
}

RatFunc& RatFunc::operator*=(Complex c) {
  poly_ *= c;
  for (auto& t : poles_)
    for (auto& x : t.coeffs) x *= c;
  if (c == Complex(0.0)) poles_.clear();
  return *this;
}

std::vector<Complex> RatFunc::laurent_at(Complex p, int order_hint, int count) const {
  std::vector<Complex> out(static_cast<size_t>(order_hint + count), 0.0);
  const int idx = find_pole(p, 0.0);
  std::vector<Complex> reg(static_cast<size_t>(std::max(count, 0)), 0.0);
  const Poly shifted = poly_.taylor_shift(p);
  for (int k = 0; k < count && k <= shifted.degree(); ++k) reg[static_cast<size_t>(k)] = shifted[k];
  for (size_t i = 0; i < poles_.size(); ++i) {
    if (static_cast<int>(i) == idx) continue;
    const auto& t = poles_[i];
    for (int j = 1; j <= t.order(); ++j) add_pole_taylor(t.pole, j, t.coeffs[static_cast<size_t>(j - 1)], p, reg);
  }
  if (idx >= 0) {
    const auto& t = poles_[static_cast<size_t>(idx)];
    for (int j = 1; j <= std::min(t.order(), order_hint); ++j)
      out[static_cast<size_t>(order_hint - j)] = t.coeffs[static_cast<size_t>(j - 1)];
  }
  for (int k = 0; k < count; ++k) out[static_cast<size_t>(order_hint + k)] = reg[static_cast<size_t>(k)];
  return out;
}

RatFunc add(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol) {
  RatFunc out = f;
  out.poly_ += g.poly_;
  for (const auto& t : g.poles_) out.absorb(t, tol.delta_cluster);
  out.normalize(tol);
  return out;
}

RatFunc multiply(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol) {
  if (f.is_zero() || g.is_zero()) return {};
  // Relocate g's poles onto f's where they coincide, so that Laurent
  // expansions are taken at a common point.
  RatFunc g2(g.poly_part(), {});
  for (const auto& t : f.pole_terms()) g2.poles_.push_back(PoleTerm{t.pole, {Complex(0.0)}});
  for (const auto& t : g.pole_terms()) g2.absorb(t, tol.delta_cluster);
  std::erase_if(g2.poles_, [](const PoleTerm& t) {
    return std::all_of(t.coeffs.begin(), t.coeffs.end(), [](Complex c) { return c == Complex(0.0); });
  });
  std::vector<Complex> locs;
  for (const auto& t : f.pole_terms()) locs.push_back(t.pole);
  for (const auto& t : g2.pole_terms())
    if (f.find_pole(t.pole, 0.0) < 0) locs.push_back(t.pole);

  std::vector<PoleTerm> terms;
  for (const Complex& p : locs) {
    const int fi = f.find_pole(p, 0.0);
    const int gi = g2.find_pole(p, 0.0);
    const int mf = fi >= 0 ? f.pole_terms()[static_cast<size_t>(fi)].order() : 0;
    const int mg = gi >= 0 ? g2.pole_terms()[static_cast<size_t>(gi)].order() : 0;
    if (mf + mg == 0) continue;
    const auto a = f.laurent_at(p, mf, mg);
    const auto b = g2.laurent_at(p, mg, mf);
    PoleTerm t{p, std::vector<Complex>(static_cast<size_t>(mf + mg), 0.0)};
    for (int e = -(mf + mg); e <= -1; ++e) {
      Complex c = 0.0;
      for (int ea = -mf; ea <= mg - 1; ++ea) {
        const int eb = e - ea;
        if (eb < -mg || eb > mf - 1) continue;
        c += a[static_cast<size_t>(ea + mf)] * b[static_cast<size_t>(eb + mg)];
      }
      t.coeffs[static_cast<size_t>(-e - 1)] = c;
    }
    terms.push_back(std::move(t));
  }
  const Poly& pf = f.poly_part();
  const Poly& pg = g2.poly_part();
  Poly poly = pf * pg;
  poly += plus_part(pf, infinity_coeffs(g2, pf.degree()));
  poly += plus_part(pg, infinity_coeffs(f, pg.degree()));
  RatFunc out(std::move(poly), std::move(terms));
  out.normalize(tol);
  return out;
}

RatFunc reciprocal(const RatFunc& f, const ToleranceConfig& tol) {
  Poly num = f.numerator();
  num.trim(tol.eps_zero);
  if (num.is_zero()) throw DivisionByZero();
  std::vector<std::pair<Complex, int>> factors;
  for (const ZeroDatum& z : roots(num, tol)) factors.emplace_back(z.location, z.multiplicity);
  return RatFunc::from_factored(f.denominator(), num.leading(), factors, tol);
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) { return add(f, g, ToleranceConfig{}); }
RatFunc operator-(const RatFunc& f, const RatFunc& g) { return add(f, -g, ToleranceConfig{}); }
RatFunc operator*(const RatFunc& f, const RatFunc& g) { return multiply(f, g, ToleranceConfig{}); }

RatFunc mul_z(const RatFunc& f, const ToleranceConfig& tol) { return multiply(f, RatFunc::monomial(1), tol); }

bool in_RatD(const RatFunc& f, const ToleranceConfig& tol) {
  for (const auto& t : f.pole_terms())
    if (std::abs(t.pole) < 1.0 + tol.tau_pole) return false;
  return true;
}

const RatFunc& validate_in_RatD(const RatFunc& f, const ToleranceConfig& tol) {
  std::vector<Complex> bad;
  for (const auto& t : f.pole_terms())
    if (std::abs(t.pole) < 1.0 + tol.tau_pole) bad.push_back(t.pole);
  if (!bad.empty()) throw PoleInDisc(std::move(bad));
  return f;
}

RatFunc project_plus(const RatFunc& g, const ToleranceConfig& tol) {
  std::vector<PoleTerm> kept;
  for (const auto& t : g.pole_terms()) {
    const double m = std::abs(t.pole);
    if (std::abs(m - 1.0) <= tol.delta_boundary) throw PoleOnCircle(t.pole);
    if (m > 1.0) kept.push_back(t);
  }
  return RatFunc(g.poly_part(), std::move(kept));
}

std::vector<Complex> taylor_coeffs(const RatFunc& f, int N) { return f.taylor_at(0.0, N); }

std::vector<Complex> fourier_coeffs(const RatFunc& g, int lo, int hi, const ToleranceConfig& tol) {
  std::vector<PoleTerm> outer, inner;
  for (const auto& t : g.pole_terms()) {
    const double m = std::abs(t.pole);
    if (std::abs(m - 1.0) <= tol.delta_boundary) throw PoleOnCircle(t.pole);
    (m > 1.0 ? outer : inner).push_back(t);
  }
  std::vector<Complex> out(static_cast<size_t>(hi - lo + 1), 0.0);
  if (hi >= 0) {
    const RatFunc analytic(g.poly_part(), std::move(outer));
    const auto tc = analytic.taylor_at(0.0, hi + 1);
    for (int n = std::max(lo, 0); n <= hi; ++n) out[static_cast<size_t>(n - lo)] = tc[static_cast<size_t>(n)];
  }
  if (lo < 0) {
    const RatFunc coanalytic({}, std::move(inner));
    const auto ic = infinity_coeffs(coanalytic, -lo);
    for (int n = lo; n <= std::min(hi, -1); ++n) out[static_cast<size_t>(n - lo)] = ic[static_cast<size_t>(-n - 1)];
  }
  return out;
}

double coefficient_distance(const RatFunc& f, const RatFunc& g, int count) {
  const auto a = taylor_coeffs(f, count);
  const auto b = taylor_coeffs(g, count);
  double d = 0.0;
  for (size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double coefficient_norm(const RatFunc& f, int count) {
  double d = 0.0;
  for (const auto& c : taylor_coeffs(f, count)) d = std::max(d, std::abs(c));
  return d;
}

Complex node_of_pole(Complex p) { return 1.0 / std::conj(p); }
Complex pole_of_node(Complex w) { return 1.0 / std::conj(w); }

RatFunc kappa(Complex w, int n) {
  if (w == Complex(0.0)) return RatFunc::monomial(n);
  const Complex p = pole_of_node(w);
  PoleTerm t{p, std::vector<Complex>(static_cast<size_t>(n + 1))};
  for (int j = 1; j <= n + 1; ++j) t.coeffs[static_cast<size_t>(j - 1)] = kappa_entry(p, j, n);
  return RatFunc({}, {std::move(t)});
}

RatFunc kernel(Complex w, int n) { return kappa(w, n) * factorial(n); }

std::vector<Complex> pole_coeffs_from_kappa(Complex w, std::span<const Complex> c) {
  const Complex p = pole_of_node(w);
  const int m = static_cast<int>(c.size());
  std::vector<Complex> a(c.size(), 0.0);
  for (int n = 0; n < m; ++n)
    for (int j = 1; j <= n + 1; ++j) a[static_cast<size_t>(j - 1)] += kappa_entry(p, j, n) * c[static_cast<size_t>(n)];
  return a;
}

std::vector<Complex> kappa_coords_from_pole(Complex p, std::span<const Complex> a) {
  const int m = static_cast<int>(a.size());
  std::vector<Complex> c(a.size(), 0.0);
  for (int j = m; j >= 1; --j) {
    Complex rhs = a[static_cast<size_t>(j - 1)];
    for (int n = j; n < m; ++n) rhs -= kappa_entry(p, j, n) * c[static_cast<size_t>(n)];
    c[static_cast<size_t>(j - 1)] = rhs / kappa_entry(p, j, j - 1);
  }
  return c;
}

RatFunc from_kappa(Complex w, std::span<const Complex> c) {
  if (w == Complex(0.0)) return RatFunc::polynomial(Poly(std::vector<Complex>(c.begin(), c.end())));
  auto a = pole_coeffs_from_kappa(w, c);
  while (!a.empty() && a.back() == Complex(0.0)) a.pop_back();
  if (a.empty()) return {};
  return RatFunc({}, {PoleTerm{pole_of_node(w), std::move(a)}});
}

std::vector<Complex> kappa_coords_at(const RatFunc& f, Complex w, int n, double radius) {
  std::vector<Complex> out(static_cast<size_t>(n), 0.0);
  if (w == Complex(0.0)) {
    for (int k = 0; k < n; ++k) out[static_cast<size_t>(k)] = f.poly_part()[k];
    return out;
  }
  const Complex p = pole_of_node(w);
  const int idx = f.find_pole(p, radius * std::max(1.0, std::abs(p)));
  if (idx < 0) return out;
  const auto& t = f.pole_terms()[static_cast<size_t>(idx)];
  const auto c = kappa_coords_from_pole(t.pole, t.coeffs);
  for (int k = 0; k < n && k < static_cast<int>(c.size()); ++k) out[static_cast<size_t>(k)] = c[static_cast<size_t>(k)];
  return out;
}

KBasisExpansion to_kbasis(const RatFunc& f, const ToleranceConfig& tol) {
  validate_in_RatD(f, tol);
  KBasisExpansion e;
  if (!f.poly_part().is_zero()) {
    KBasisExpansion::Node node{0.0, {}};
    for (int n = 0; n <= f.poly_part().degree(); ++n) node.coeffs.push_back(f.poly_part()[n] / factorial(n));
    e.nodes.push_back(std::move(node));
  }
  for (const auto& t : f.pole_terms()) {
    auto c = kappa_coords_from_pole(t.pole, t.coeffs);
    for (size_t n = 0; n < c.size(); ++n) c[n] /= factorial(static_cast<int>(n));
    e.nodes.push_back({node_of_pole(t.pole), std::move(c)});
  }
  return e;
}

RatFunc from_kbasis(const KBasisExpansion& e, const ToleranceConfig& tol) {
  RatFunc out;
  for (const auto& node : e.nodes) {
    if (std::abs(node.w) >= 1.0 - tol.delta_boundary) throw PoleInDisc({pole_of_node(node.w)});
    std::vector<Complex> c = node.coeffs;
    for (size_t n = 0; n < c.size(); ++n) c[n] *= factorial(static_cast<int>(n));
    out = add(out, from_kappa(node.w, c), tol);
  }
  return out;
}

}  // namespace rankone
