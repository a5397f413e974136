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

#ifndef RANKONE_RATFUN_HPP_
#define RANKONE_RATFUN_HPP_

#include <span>
#include <utility>
#include <vector>

#include "rankone/cpoly.hpp"

namespace rankone {

/// Principal part at one pole: sum_j coeffs[j-1] / (z - pole)^j.
struct PoleTerm {
  Complex pole;
  std::vector<Complex> coeffs;

  int order() const { return static_cast<int>(coeffs.size()); }
};

/// A rational function stored in partial-fraction form: a polynomial part plus
/// one principal part per pole. Poles may lie anywhere (including 0), so the
/// same type carries symbols with poles inside the disc; membership in Rat(D)
/// is checked by validate_in_RatD.
///
/// Products and sums never re-factor a denominator: pole locations are
/// carried through, so multiplicities add exactly. Root finding is needed
/// only when a function is built from an expanded denominator or inverted.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly poly, std::vector<PoleTerm> poles);

  static RatFunc constant(Complex c);
  static RatFunc polynomial(Poly p);
  static RatFunc monomial(int degree, Complex c = 1.0);
  /// c / (z - pole)^order
  static RatFunc pole_power(Complex pole, int order, Complex c = 1.0);

  /// num / den. Denominator roots are clustered; common factors cancel
  /// because their partial-fraction coefficients come out negligible.
  static RatFunc from_num_den(const Poly& num, const Poly& den, const ToleranceConfig& tol);
  /// num / (lead * prod (z - root)^mult)
  static RatFunc from_factored(const Poly& num, Complex lead,
                               std::span<const std::pair<Complex, int>> factors,
                               const ToleranceConfig& tol);

  const Poly& poly_part() const { return poly_; }
  const std::vector<PoleTerm>& pole_terms() const { return poles_; }

  Poly numerator() const;
  /// Monic, prod (z - p)^order over the pole terms.
  Poly denominator() const;

  bool is_zero() const { return poly_.is_zero() && poles_.empty(); }
  Complex operator()(Complex z) const;
  /// f^(n)(z0)/n! for n < count. z0 must not be a pole.
  std::vector<Complex> taylor_at(Complex z0, int count) const;
  Complex derivative_at(Complex z0, int n) const;
  RatFunc derivative() const;

  /// Index of the pole term within radius of p, or -1.
  int find_pole(Complex p, double radius) const;
  double min_pole_modulus() const;

  /// Magnitude used for relative trimming: the larger of the polynomial
  /// coefficients and the pole coefficients weighted by their size on |z|=1.
  double scale() const;

  /// Merges poles closer than delta_cluster and trims negligible coefficients.
  RatFunc& normalize(const ToleranceConfig& tol);

  /// Removes the principal part near p (used for removable singularities).
  RatFunc without_pole(Complex p, double radius) const;

  /// conj(f(1/conj(z))): the function whose boundary values are conj(f).
  RatFunc conj_reflect(const ToleranceConfig& tol) const;

  RatFunc& operator*=(Complex c);
  friend RatFunc operator*(RatFunc f, Complex c) { return f *= c; }
  friend RatFunc operator*(Complex c, RatFunc f) { return f *= c; }
  friend RatFunc operator-(RatFunc f) { return f *= -1.0; }

  /// Laurent coefficients at p for exponents -order .. count-1, where order is
  /// the pole order of f at p (0 if p is not a pole). Returned ascending.
  std::vector<Complex> laurent_at(Complex p, int order_hint, int count) const;

 private:
  friend RatFunc add(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol);
  friend RatFunc multiply(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol);
  void absorb(PoleTerm term, double merge_radius_rel);
  Poly poly_;
  std::vector<PoleTerm> poles_;
};

RatFunc add(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol);
RatFunc multiply(const RatFunc& f, const RatFunc& g, const ToleranceConfig& tol);
/// 1/f; the new poles are the clustered zeros of f's numerator.
RatFunc reciprocal(const RatFunc& f, const ToleranceConfig& tol);

// Operators use the default ToleranceConfig for merging and trimming.
RatFunc operator+(const RatFunc& f, const RatFunc& g);
RatFunc operator-(const RatFunc& f, const RatFunc& g);
RatFunc operator*(const RatFunc& f, const RatFunc& g);

/// z * f
RatFunc mul_z(const RatFunc& f, const ToleranceConfig& tol);

/// Returns f if every pole has modulus >= 1 + tau_pole, else throws PoleInDisc.
const RatFunc& validate_in_RatD(const RatFunc& f, const ToleranceConfig& tol);
bool in_RatD(const RatFunc& f, const ToleranceConfig& tol);

/// Orthogonal projection onto H^2 of a symbol with no poles on the circle:
/// keeps poles outside the disc and the polynomial part.
RatFunc project_plus(const RatFunc& g, const ToleranceConfig& tol);

/// First N Maclaurin coefficients.
std::vector<Complex> taylor_coeffs(const RatFunc& f, int N);

/// Fourier coefficients on the unit circle for modes lo..hi (inclusive).
std::vector<Complex> fourier_coeffs(const RatFunc& g, int lo, int hi, const ToleranceConfig& tol);

/// max_n<count |f^(n) - g^(n)| over Maclaurin coefficients.
double coefficient_distance(const RatFunc& f, const RatFunc& g, int count = 128);
double coefficient_norm(const RatFunc& f, int count = 128);

// ---------------------------------------------------------------------------
// Reproducing-kernel coordinates.
//
// k_w^(n) = n! z^n / (1 - conj(w) z)^(n+1). Internally the normalized basis
// kappa_w^n = k_w^(n) / n! is used; it avoids factorials and for w = 0 is
// just z^n.

/// Node of the kernel basis carrying a pole p (|p| > 1): 1/conj(p).
Complex node_of_pole(Complex p);
Complex pole_of_node(Complex w);

RatFunc kernel(Complex w, int n);
RatFunc kappa(Complex w, int n);

/// kappa-coordinates of a principal part at pole p.
std::vector<Complex> kappa_coords_from_pole(Complex p, std::span<const Complex> pole_coeffs);
/// Principal-part coefficients at pole_of_node(w) of sum_n c_n kappa_w^n (w != 0).
std::vector<Complex> pole_coeffs_from_kappa(Complex w, std::span<const Complex> kappa_coeffs);

/// sum_n c_n kappa_w^n.
RatFunc from_kappa(Complex w, std::span<const Complex> kappa_coeffs);

/// kappa-coordinates of f at node w (polynomial part for w = 0), padded or
/// cut to length n. Components of f at other nodes are ignored.
std::vector<Complex> kappa_coords_at(const RatFunc& f, Complex w, int n, double radius);

struct KBasisExpansion {
  struct Node {
    Complex w;
    std::vector<Complex> coeffs;  // coefficient of k_w^(n), n = 0..
  };
  std::vector<Node> nodes;
};

KBasisExpansion to_kbasis(const RatFunc& f, const ToleranceConfig& tol);
RatFunc from_kbasis(const KBasisExpansion& e, const ToleranceConfig& tol);

}  // namespace rankone

#endif  // RANKONE_RATFUN_HPP_
