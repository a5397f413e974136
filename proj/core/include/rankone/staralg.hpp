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

// The twisted-product algebra on Rat(D) determined by a fixed symbol phi:
//
//   r x s = z r T(s) + z s T(r) - T(z r s),     T = T_{conj(phi)},
//   r o s = r + s - r x s                        (circle composition),
//
// its structure map r -> (gamma_-(r), gamma_+(r)), the circle group, and the
// similarity decision for U + r(x)phi versus U + s(x)phi.

#ifndef RANKONE_STARALG_HPP_
#define RANKONE_STARALG_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rankone/hardy.hpp"

namespace rankone {

/// Data attached to one interior zero a of phi of order N.
struct LocalZero {
  Complex a;
  int order = 1;
  RatFunc u;      // ((z - a)/(1 - conj(a) z))^N
  RatFunc psi;    // phi / u
  RatFunc alpha;  // in span{k_a^(0..N-1)}, alpha psi - u beta = sigma
  RatFunc beta;
  RatFunc e;      // unit of S_a^N
  RatFunc x;      // k_a^(N-2) (N >= 2), generator of the nilpotent part
  int sigma = 1;
  double bezout_residual = 0.0;
  double unit_residual = 0.0;
  /// Columns: kappa-coordinates at a of e, x, x^2, ..., x^(N-1).
  Eigen::MatrixXcd basis;
};

/// phi together with the per-zero data of its interior zeros. Immutable after
/// build(); safe to share between threads.
class PhiContext {
 public:
  static PhiContext build(const RatFunc& phi, const ToleranceConfig& tol = {});

  const RatFunc& phi() const { return phi_; }
  const std::vector<LocalZero>& zeros() const { return zeros_; }
  const ToleranceConfig& tol() const { return tol_; }

  /// Registered zero within delta_cluster of a; throws UnknownNode.
  const LocalZero& zero_at(Complex a) const;

 private:
  RatFunc phi_;
  std::vector<LocalZero> zeros_;
  ToleranceConfig tol_;
};

RatFunc times(const PhiContext& ctx, const RatFunc& r, const RatFunc& s);
RatFunc circle(const PhiContext& ctx, const RatFunc& r, const RatFunc& s);

/// r x f through the kernel expansion of r:
///   kappa_a^n x f = z T(kappa_a^n) f + sum_j conj(G_j(a)) kappa_a^(n-j),
/// with G = Gamma_-(.; f) and G_j its Taylor coefficients. Equal to
/// times(ctx, r, f); used as an independent route and for operator columns.
RatFunc times_via_kernels(const PhiContext& ctx, const RatFunc& r, const RatFunc& f);

/// First N Maclaurin coefficients of r x f, computed without forming the
/// partial fractions of z T(r) f (which are ill-conditioned when f has high
/// degree).
std::vector<Complex> times_series(const PhiContext& ctx, const RatFunc& r, const RatFunc& f, int N);

/// Element lambda + c_1 x + ... + c_{N-1} x^(N-1) of C[x]/(x^N), where the
/// constant stands for the unit e_a.
struct LocalNilElement {
  Complex node;
  std::vector<Complex> coeffs;  // (lambda, c_1, ..., c_{N-1})

  static LocalNilElement unit(Complex node, int N);
  int size() const { return static_cast<int>(coeffs.size()); }
  LocalNilElement operator*(const LocalNilElement& o) const;
  LocalNilElement operator+(const LocalNilElement& o) const;
  LocalNilElement operator-(const LocalNilElement& o) const;
  /// Multiplicative inverse; requires coeffs[0] != 0.
  LocalNilElement inverse() const;
  /// Index of the first coefficient with modulus > threshold (size() if none).
  int valuation(double threshold) const;
};

LocalNilElement local_coords(const PhiContext& ctx, const RatFunc& r, Complex a);
RatFunc local_lift(const PhiContext& ctx, const LocalNilElement& el);

struct StructureVector {
  std::vector<LocalNilElement> locals;  // one per zero, in ctx order
  RatFunc symbol;                       // gamma_+(r), vanishes at 0
};

StructureVector to_structure(const PhiContext& ctx, const RatFunc& r);
RatFunc from_structure(const PhiContext& ctx, const StructureVector& v);

/// t0 with gamma_+(t0) = q, for q in Rat(D) with q(0) = 0. Throws
/// SingularBlock when phi nearly vanishes at a node of q that is not a
/// registered zero.
RatFunc lift_symbol(const PhiContext& ctx, const RatFunc& q);

/// gamma_-(r) = sum_a r x e_a.
RatFunc gamma_minus(const PhiContext& ctx, const RatFunc& r);

struct InvertibilityReport {
  bool invertible = false;
  bool boundary_ambiguous = false;
  std::vector<std::string> reasons;
};

InvertibilityReport is_circle_invertible(const PhiContext& ctx, const RatFunc& t);

/// t' with t o t' = 0; throws NotCircleInvertible.
RatFunc circle_inverse(const PhiContext& ctx, const RatFunc& t);

enum class Verdict { yes, no, boundary_ambiguous };
const char* to_string(Verdict v);

/// One row of the zero-multiset comparison of 1 - Gamma_+(.; r) and
/// 1 - Gamma_+(.; s).
struct ZeroPair {
  std::optional<ZeroDatum> r;
  std::optional<ZeroDatum> s;
  bool ok = true;
  bool ambiguous = false;
};

/// min(N_a, ord_a(1 - Gamma_-(.; r))) versus the same for s.
struct LocalOrderRow {
  Complex a;
  int order = 0;  // N_a
  int ord_r = 0;  // min(N_a, ord)
  int ord_s = 0;
  bool ok = true;
};

struct ConditionTables {
  std::vector<ZeroPair> cond_a;
  std::vector<LocalOrderRow> cond_b;
  Verdict verdict = Verdict::no;
};

ConditionTables similarity_conditions(const PhiContext& ctx, const RatFunc& r, const RatFunc& s);

struct Witness {
  RatFunc t;
  double residual = 0.0;  // coefficient distance of r o t and s
};

/// Circle-invertible t with r o t = s when one exists; nullopt when the
/// conditions fail. Throws BoundaryAmbiguous when the answer depends on the
/// boundary band, IllConditioned when the constructed witness misses
/// eps_witness.
std::optional<Witness> solve_circle(const PhiContext& ctx, const RatFunc& r, const RatFunc& s);

struct SimilarityReport {
  Verdict verdict = Verdict::no;
  std::vector<ZeroPair> cond_a;
  std::vector<LocalOrderRow> cond_b;
  std::optional<Witness> witness;
};

SimilarityReport similar(const PhiContext& ctx, const RatFunc& r, const RatFunc& s);

}  // namespace rankone

#endif  // RANKONE_STARALG_HPP_
