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

#include "rankone/staralg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "numeric_util.hpp"

namespace rankone {

namespace {

struct KappaBlock {
  Complex node;
  std::vector<Complex> coeffs;
};

std::vector<KappaBlock> kappa_blocks(const RatFunc& r) {
  std::vector<KappaBlock> out;
  const Poly& p = r.poly_part();
  if (!p.is_zero()) out.push_back({0.0, std::vector<Complex>(p.coeffs().begin(), p.coeffs().end())});
  for (const auto& t : r.pole_terms()) out.push_back({node_of_pole(t.pole), kappa_coords_from_pole(t.pole, t.coeffs)});
  return out;
}

std::vector<Complex> convolve(const std::vector<Complex>& a, const std::vector<Complex>& b, size_t n) {
  std::vector<Complex> out(n, 0.0);
  for (size_t i = 0; i < n && i < a.size(); ++i)
    for (size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// ((1 - conj(a) z) / (z - a))^N
RatFunc inverse_blaschke(Complex a, int N, const ToleranceConfig& tol) {
  if (a == Complex(0.0)) return RatFunc::pole_power(0.0, N);
  const Poly lin({1.0, -std::conj(a)});
  Poly num = Poly::constant(1.0);
  for (int k = 0; k < N; ++k) num = num * lin;
  const std::pair<Complex, int> f{a, N};
  return RatFunc::from_factored(num, 1.0, std::span(&f, 1), tol);
}

// ((z - a) / (1 - conj(a) z))^N
RatFunc blaschke(Complex a, int N, const ToleranceConfig& tol) {
  if (a == Complex(0.0)) return RatFunc::monomial(N);
  const Poly lin({-a, 1.0});
  Poly num = Poly::constant(1.0);
  for (int k = 0; k < N; ++k) num = num * lin;
  const std::pair<Complex, int> f{1.0 / std::conj(a), N};
  return RatFunc::from_factored(num, std::pow(-std::conj(a), N), std::span(&f, 1), tol);
}

double pole_radius(Complex a, const ToleranceConfig& tol) { return tol.delta_cluster * std::max(1.0, std::abs(a)); }

double relative_distance(const RatFunc& f, const RatFunc& g) {
  return coefficient_distance(f, g) / std::max(1.0, coefficient_norm(g));
}

RatFunc sum(const std::vector<RatFunc>& terms, const ToleranceConfig& tol) {
  RatFunc out;
  for (const auto& t : terms) out = add(out, t, tol);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Context

PhiContext PhiContext::build(const RatFunc& phi, const ToleranceConfig& tol) {
  tol.validate();
  validate_in_RatD(phi, tol);
  if (phi.is_zero() || sup_norm_circle(phi) <= tol.eps_zero) throw PhiZero();
  PhiContext ctx;
  ctx.phi_ = phi;
  ctx.tol_ = tol;
  for (const auto& z : zeros_in_closed_disc(phi, tol)) {
    if (z.region != Region::interior) continue;
    LocalZero lz;
    lz.a = z.location;
    lz.order = z.multiplicity;
    const Complex a = lz.a;
    const int N = lz.order;
    const double rad = pole_radius(a, tol);
    lz.u = blaschke(a, N, tol);
    const RatFunc inv_u = inverse_blaschke(a, N, tol);
    lz.psi = multiply(phi, inv_u, tol).without_pole(a, rad);

    // alpha = sum c_n kappa_a^n with (alpha psi)_j(a) = delta_j0.
    const auto psi_t = lz.psi.taylor_at(a, N);
    Eigen::MatrixXcd M(N, N);
    for (int n = 0; n < N; ++n) {
      const auto col = convolve(kappa(a, n).taylor_at(a, N), psi_t, static_cast<size_t>(N));
      for (int j = 0; j < N; ++j) M(j, n) = col[static_cast<size_t>(j)];
    }
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(N);
    rhs(0) = 1.0;
    const Eigen::VectorXcd c = M.partialPivLu().solve(rhs);
    const std::vector<Complex> cv(c.data(), c.data() + N);
    lz.alpha = from_kappa(a, cv);
    const RatFunc ap = multiply(lz.alpha, lz.psi, tol);
    lz.beta = multiply(add(ap, RatFunc::constant(-1.0), tol), inv_u, tol).without_pole(a, rad);
    const RatFunc e1 = project_plus(multiply(mul_z(lz.alpha, tol).conj_reflect(tol), lz.u, tol), tol);

    // The sign of the unit is fixed by testing e x kappa_a^m = kappa_a^m.
    auto unit_residual = [&](const RatFunc& e) {
      double worst = 0.0;
      for (int m = 0; m < N; ++m) {
        const RatFunc k = kappa(a, m);
        worst = std::max(worst, relative_distance(times(ctx, e, k), k));
      }
      return worst;
    };
    const double res_plus = unit_residual(e1);
    const double res_minus = unit_residual(-e1);
    lz.sigma = res_plus <= res_minus ? 1 : -1;
    lz.unit_residual = std::min(res_plus, res_minus);
    if (lz.unit_residual > 1e-8) {
      std::ostringstream os;
      os << "unit property fails at zero " << format_complex(a) << " (residual " << lz.unit_residual << ")";
      throw IllConditioned(os.str());
    }
    const double s = lz.sigma;
    lz.alpha *= s;
    lz.beta *= s;
    lz.e = e1 * s;
    lz.bezout_residual = coefficient_distance(
        add(multiply(lz.alpha, lz.psi, tol), -multiply(lz.u, lz.beta, tol), tol), RatFunc::constant(s));

    // Basis of S_a^N: e, x, x^2, ..., x^(N-1).
    lz.basis = Eigen::MatrixXcd::Zero(N, N);
    auto put = [&](int col, const RatFunc& f) {
      const auto kc = kappa_coords_at(f, a, N, tol.delta_cluster);
      for (int j = 0; j < N; ++j) lz.basis(j, col) = kc[static_cast<size_t>(j)];
    };
    put(0, lz.e);
    if (N >= 2) {
      lz.x = kernel(a, N - 2);
      RatFunc xp = lz.x;
      put(1, xp);
      for (int k = 2; k < N; ++k) {
        xp = times(ctx, xp, lz.x);
        put(k, xp);
      }
    }
    ctx.zeros_.push_back(std::move(lz));
  }
  return ctx;
}

const LocalZero& PhiContext::zero_at(Complex a) const {
  for (const auto& z : zeros_)
    if (std::abs(z.a - a) <= pole_radius(z.a, tol_)) return z;
  throw UnknownNode(a);
}

// ---------------------------------------------------------------------------
// Products

RatFunc times(const PhiContext& ctx, const RatFunc& r, const RatFunc& s) {
  const auto& tol = ctx.tol();
  const RatFunc& phi = ctx.phi();
  const RatFunc zr = mul_z(r, tol);
  const RatFunc a = multiply(zr, toeplitz_conj_apply(phi, s, tol), tol);
  const RatFunc b = multiply(mul_z(s, tol), toeplitz_conj_apply(phi, r, tol), tol);
  const RatFunc c = toeplitz_conj_apply(phi, multiply(zr, s, tol), tol);
  return add(add(a, b, tol), -c, tol);
}

RatFunc circle(const PhiContext& ctx, const RatFunc& r, const RatFunc& s) {
  const auto& tol = ctx.tol();
  return add(add(r, s, tol), -times(ctx, r, s), tol);
}

namespace {

// sum over nodes of r: sum_n c_n sum_j conj(G_j(a)) kappa_a^(n-j), G = Gamma_-(.; f)
RatFunc kernel_correction(const PhiContext& ctx, const RatFunc& r, const RatFunc& f) {
  const auto& tol = ctx.tol();
  const RatFunc G = gamma_minus_fn(ctx.phi(), f, tol);
  RatFunc out;
  for (const auto& blk : kappa_blocks(r)) {
    const size_t M = blk.coeffs.size();
    const auto g = G.taylor_at(blk.node, static_cast<int>(M));
    std::vector<Complex> d(M, 0.0);
    for (size_t m = 0; m < M; ++m)
      for (size_t n = m; n < M; ++n) d[m] += blk.coeffs[n] * std::conj(g[n - m]);
    out = add(out, from_kappa(blk.node, d), tol);
  }
  return out;
}

}  // namespace

RatFunc times_via_kernels(const PhiContext& ctx, const RatFunc& r, const RatFunc& f) {
  const auto& tol = ctx.tol();
  validate_in_RatD(r, tol);
  const RatFunc lead = multiply(gamma_plus(ctx.phi(), r, tol), f, tol);
  return add(lead, kernel_correction(ctx, r, f), tol);
}

std::vector<Complex> times_series(const PhiContext& ctx, const RatFunc& r, const RatFunc& f, int N) {
  const auto& tol = ctx.tol();
  validate_in_RatD(r, tol);
  const auto lead = convolve(taylor_coeffs(gamma_plus(ctx.phi(), r, tol), N), taylor_coeffs(f, N),
                             static_cast<size_t>(N));
  auto out = taylor_coeffs(kernel_correction(ctx, r, f), N);
  for (int n = 0; n < N; ++n) out[static_cast<size_t>(n)] += lead[static_cast<size_t>(n)];
  return out;
}

// ---------------------------------------------------------------------------
// Local algebra C[x]/(x^N) with unit

LocalNilElement LocalNilElement::unit(Complex node, int N) {
  LocalNilElement e{node, std::vector<Complex>(static_cast<size_t>(N), 0.0)};
  e.coeffs[0] = 1.0;
  return e;
}

LocalNilElement LocalNilElement::operator*(const LocalNilElement& o) const {
  return {node, convolve(coeffs, o.coeffs, coeffs.size())};
}

LocalNilElement LocalNilElement::operator+(const LocalNilElement& o) const {
  LocalNilElement out = *this;
  for (size_t k = 0; k < coeffs.size(); ++k) out.coeffs[k] += o.coeffs[k];
  return out;
}

LocalNilElement LocalNilElement::operator-(const LocalNilElement& o) const {
  LocalNilElement out = *this;
  for (size_t k = 0; k < coeffs.size(); ++k) out.coeffs[k] -= o.coeffs[k];
  return out;
}

LocalNilElement LocalNilElement::inverse() const {
  if (coeffs.empty() || coeffs[0] == Complex(0.0)) throw DivisionByZero();
  LocalNilElement out{node, std::vector<Complex>(coeffs.size(), 0.0)};
  out.coeffs[0] = 1.0 / coeffs[0];
  for (size_t n = 1; n < coeffs.size(); ++n) {
    Complex acc = 0.0;
    for (size_t k = 1; k <= n; ++k) acc += coeffs[k] * out.coeffs[n - k];
    out.coeffs[n] = -acc / coeffs[0];
  }
  return out;
}

int LocalNilElement::valuation(double threshold) const {
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (std::abs(coeffs[k]) > threshold) return static_cast<int>(k);
  return size();
}

LocalNilElement local_coords(const PhiContext& ctx, const RatFunc& r, Complex a) {
  const LocalZero& z = ctx.zero_at(a);
  const RatFunc y = times(ctx, z.e, r);
  const auto kc = kappa_coords_at(y, z.a, z.order, ctx.tol().delta_cluster);
  const Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(kc.data(), z.order);
  const Eigen::VectorXcd c = z.basis.partialPivLu().solve(rhs);
  return {z.a, std::vector<Complex>(c.data(), c.data() + z.order)};
}

RatFunc local_lift(const PhiContext& ctx, const LocalNilElement& el) {
  const LocalZero& z = ctx.zero_at(el.node);
  if (el.size() != z.order) throw Error("local element size does not match the zero order");
  const Eigen::VectorXcd c = Eigen::Map<const Eigen::VectorXcd>(el.coeffs.data(), z.order);
  const Eigen::VectorXcd kc = z.basis * c;
  return from_kappa(z.a, std::vector<Complex>(kc.data(), kc.data() + z.order));
}

// ---------------------------------------------------------------------------
// Structure map

RatFunc gamma_minus(const PhiContext& ctx, const RatFunc& r) {
  std::vector<RatFunc> parts;
  for (const auto& z : ctx.zeros()) parts.push_back(times(ctx, r, z.e));
  return sum(parts, ctx.tol());
}

StructureVector to_structure(const PhiContext& ctx, const RatFunc& r) {
  validate_in_RatD(r, ctx.tol());
  StructureVector v;
  for (const auto& z : ctx.zeros()) v.locals.push_back(local_coords(ctx, r, z.a));
  v.symbol = gamma_plus(ctx.phi(), r, ctx.tol());
  return v;
}

RatFunc lift_symbol(const PhiContext& ctx, const RatFunc& q) {
  const auto& tol = ctx.tol();
  validate_in_RatD(q, tol);
  const RatFunc g = multiply(q, RatFunc::pole_power(0.0, 1), tol).without_pole(0.0, 0.0);
  const double phi_scale = std::max(sup_norm_circle(ctx.phi()), ctx.phi().scale());
  RatFunc out;
  for (const auto& blk : kappa_blocks(g)) {
    const int M = static_cast<int>(blk.coeffs.size());
    int shift = 0;
    for (const auto& z : ctx.zeros())
      if (std::abs(z.a - blk.node) <= pole_radius(z.a, tol)) shift = z.order;
    const auto ph = ctx.phi().taylor_at(blk.node, M + shift);
    const Complex lead = std::conj(ph[static_cast<size_t>(shift)]);
    if (std::abs(lead) <= tol.tau_ord * phi_scale) throw SingularBlock("phi nearly vanishes at the node " + format_complex(blk.node) + ", which is not a registered zero");
    // sum_{i >= 0} c_{m+shift+i} conj(phi_{shift+i}) = d_m, solved from the top.
    std::vector<Complex> c(static_cast<size_t>(M + shift), 0.0);
    for (int m = M - 1; m >= 0; --m) {
      Complex acc = blk.coeffs[static_cast<size_t>(m)];
      for (int i = 1; m + i < M; ++i)
        acc -= c[static_cast<size_t>(m + shift + i)] * std::conj(ph[static_cast<size_t>(shift + i)]);
      c[static_cast<size_t>(m + shift)] = acc / lead;
    }
    out = add(out, from_kappa(blk.node, c), tol);
  }
  return out;
}

RatFunc from_structure(const PhiContext& ctx, const StructureVector& v) {
  const auto& tol = ctx.tol();
  if (v.locals.size() != ctx.zeros().size()) throw Error("structure vector does not match the context zeros");
  RatFunc t = lift_symbol(ctx, v.symbol);
  t = add(t, -gamma_minus(ctx, t), tol);
  for (const auto& el : v.locals) t = add(t, local_lift(ctx, el), tol);
  return t;
}

// ---------------------------------------------------------------------------
// Circle group

InvertibilityReport is_circle_invertible(const PhiContext& ctx, const RatFunc& t) {
  const auto& tol = ctx.tol();
  InvertibilityReport rep;
  const RatFunc f = add(RatFunc::constant(1.0), -gamma_plus(ctx.phi(), t, tol), tol);
  for (const auto& z : zeros_in_closed_disc(f, tol)) {
    std::ostringstream os;
    if (z.region == Region::boundary) {
      rep.boundary_ambiguous = true;
      os << "BOUNDARY_AMBIGUOUS: 1 - gamma_+(t) vanishes near the unit circle at " << format_complex(z.location);
    } else {
      os << "1 - gamma_+(t) vanishes inside the disc at " << format_complex(z.location);
    }
    rep.reasons.push_back(os.str());
  }
  if (!ctx.zeros().empty()) {
    const RatFunc G = gamma_minus_fn(ctx.phi(), t, tol);
    for (const auto& z : ctx.zeros()) {
      if (std::abs(G(z.a) - 1.0) <= tol.tau_unit) {
        rep.reasons.push_back("Gamma_-(a; t) = 1 at the zero a = " + format_complex(z.a) + " of phi");
      }
    }
  }
  rep.invertible = rep.reasons.empty();
  return rep;
}

RatFunc circle_inverse(const PhiContext& ctx, const RatFunc& t) {
  const auto& tol = ctx.tol();
  const auto rep = is_circle_invertible(ctx, t);
  if (!rep.invertible) throw NotCircleInvertible(rep.reasons.front());
  StructureVector v = to_structure(ctx, t);
  const RatFunc one = RatFunc::constant(1.0);
  v.symbol = add(one, -reciprocal(add(one, -v.symbol, tol), tol), tol);
  for (auto& el : v.locals) {
    const auto e = LocalNilElement::unit(el.node, el.size());
    el = e - (e - el).inverse();
  }
  const RatFunc ti = from_structure(ctx, v);
  // One correction step: t o (ti o -c) = c o -c = c x c.
  const RatFunc c = circle(ctx, t, ti);
  return circle(ctx, ti, -c);
}

// ---------------------------------------------------------------------------
// Similarity

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "YES";
    case Verdict::no:
      return "NO";
    case Verdict::boundary_ambiguous:
      return "BOUNDARY_AMBIGUOUS";
  }
  return "?";
}

ConditionTables similarity_conditions(const PhiContext& ctx, const RatFunc& r, const RatFunc& s) {
  const auto& tol = ctx.tol();
  validate_in_RatD(r, tol);
  validate_in_RatD(s, tol);
  ConditionTables out;
  const RatFunc one = RatFunc::constant(1.0);
  const auto zr = zeros_near_disc(add(one, -gamma_plus(ctx.phi(), r, tol), tol), tol.delta_match, tol);
  const auto zs = zeros_near_disc(add(one, -gamma_plus(ctx.phi(), s, tol), tol), tol.delta_match, tol);

  bool fail = false;
  bool ambiguous = false;
  std::vector<bool> used(zs.size(), false);
  auto record = [&](ZeroPair p) {
    const bool ext_r = !p.r || p.r->region == Region::exterior;
    const bool ext_s = !p.s || p.s->region == Region::exterior;
    if (ext_r && ext_s) return;
    const bool bnd = (p.r && p.r->region == Region::boundary) || (p.s && p.s->region == Region::boundary);
    if (p.r && p.s) {
      p.ok = p.r->multiplicity == p.s->multiplicity;
      p.ambiguous = bnd || p.r->region != p.s->region;
    } else {
      p.ok = false;
      p.ambiguous = bnd;
    }
    if (p.ambiguous) {
      ambiguous = true;
    } else if (!p.ok) {
      fail = true;
    }
    out.cond_a.push_back(p);
  };
  for (const auto& a : zr) {
    int best = -1;
    double best_d = tol.delta_match;
    for (size_t j = 0; j < zs.size(); ++j) {
      const double d = std::abs(zs[j].location - a.location);
      if (!used[j] && d <= best_d) {
        best = static_cast<int>(j);
        best_d = d;
      }
    }
    ZeroPair p;
    p.r = a;
    if (best >= 0) {
      used[static_cast<size_t>(best)] = true;
      p.s = zs[static_cast<size_t>(best)];
    }
    record(p);
  }
  for (size_t j = 0; j < zs.size(); ++j) {
    if (used[j]) continue;
    ZeroPair p;
    p.s = zs[j];
    record(p);
  }

  if (!ctx.zeros().empty()) {
    const RatFunc gr = add(one, -gamma_minus_fn(ctx.phi(), r, tol), tol);
    const RatFunc gs = add(one, -gamma_minus_fn(ctx.phi(), s, tol), tol);
    for (const auto& z : ctx.zeros()) {
      LocalOrderRow row;
      row.a = z.a;
      row.order = z.order;
      row.ord_r = std::min(z.order, ord_at(gr, z.a, z.order - 1, tol).ord);
      row.ord_s = std::min(z.order, ord_at(gs, z.a, z.order - 1, tol).ord);
      row.ok = row.ord_r == row.ord_s;
      if (!row.ok) fail = true;
      out.cond_b.push_back(row);
    }
  }
  out.verdict = fail ? Verdict::no : ambiguous ? Verdict::boundary_ambiguous : Verdict::yes;
  return out;
}

namespace {

Witness build_witness(const PhiContext& ctx, const RatFunc& r, const RatFunc& s, const ConditionTables& cond) {
  const auto& tol = ctx.tol();
  const RatFunc one = RatFunc::constant(1.0);
  StructureVector v;
  const RatFunc num = add(one, -gamma_plus(ctx.phi(), s, tol), tol);
  const RatFunc den = add(one, -gamma_plus(ctx.phi(), r, tol), tol);
  RatFunc h = multiply(num, reciprocal(den, tol), tol);
  // Zeros of the denominator inside the disc cancel against the numerator.
  std::vector<Complex> cancelled;
  for (const auto& t : h.pole_terms())
    if (std::abs(t.pole) <= 1.0 + tol.delta_match) cancelled.push_back(t.pole);
  for (Complex p : cancelled) h = h.without_pole(p, 0.0);
  v.symbol = add(one, -h, tol);

  const auto sr = to_structure(ctx, r);
  const auto ss = to_structure(ctx, s);
  for (size_t k = 0; k < ctx.zeros().size(); ++k) {
    const auto& z = ctx.zeros()[k];
    const int N = z.order;
    const int m = cond.cond_b[k].ord_r;
    const auto e = LocalNilElement::unit(z.a, N);
    const auto A = e - sr.locals[k];
    const auto B = e - ss.locals[k];
    LocalNilElement vloc = e;
    if (m < N) {
      LocalNilElement As{z.a, std::vector<Complex>(static_cast<size_t>(N), 0.0)};
      LocalNilElement Bs = As;
      for (int j = m; j < N; ++j) {
        As.coeffs[static_cast<size_t>(j - m)] = A.coeffs[static_cast<size_t>(j)];
        Bs.coeffs[static_cast<size_t>(j - m)] = B.coeffs[static_cast<size_t>(j)];
      }
      if (std::abs(As.coeffs[0]) <= tol.tau_ord) throw IllConditioned("local unit factor vanishes at " + format_complex(z.a));
      vloc = Bs * As.inverse();
    }
    v.locals.push_back(e - vloc);
  }
  Witness w;
  w.t = from_structure(ctx, v);
  w.residual = coefficient_distance(circle(ctx, r, w.t), s);
  return w;
}

}  // namespace

std::optional<Witness> solve_circle(const PhiContext& ctx, const RatFunc& r, const RatFunc& s) {
  const auto& tol = ctx.tol();
  const double bound = tol.eps_witness * (coefficient_norm(s) + 1.0);
  validate_in_RatD(r, tol);
  validate_in_RatD(s, tol);
  if (coefficient_distance(r, s) < bound * 1e-3) return Witness{RatFunc(), coefficient_distance(r, s)};
  const auto cond = similarity_conditions(ctx, r, s);
  if (cond.verdict == Verdict::no) return std::nullopt;
  if (cond.verdict == Verdict::boundary_ambiguous)
    throw BoundaryAmbiguous("zero matching of 1 - Gamma_+ depends on the boundary band");
  Witness w = build_witness(ctx, r, s, cond);
  if (!(w.residual < bound)) {
    std::ostringstream os;
    os << "witness residual " << w.residual << " exceeds " << bound;
    throw IllConditioned(os.str());
  }
  return w;
}

SimilarityReport similar(const PhiContext& ctx, const RatFunc& r, const RatFunc& s) {
  auto cond = similarity_conditions(ctx, r, s);
  SimilarityReport rep;
  rep.verdict = cond.verdict;
  rep.cond_a = std::move(cond.cond_a);
  rep.cond_b = std::move(cond.cond_b);
  if (rep.verdict == Verdict::yes) rep.witness = solve_circle(ctx, r, s);
  return rep;
}

}  // namespace rankone
