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

// Dense complex polynomials in ascending-degree storage, companion-matrix root
// finding with multiplicity clustering, and the polynomial Bezout identity.

#ifndef RANKONE_CPOLY_HPP_
#define RANKONE_CPOLY_HPP_

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "rankone/errors.hpp"
#include "rankone/tolerance.hpp"

namespace rankone {

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Complex> coeffs);
  explicit Poly(std::vector<Complex> coeffs);

  static Poly constant(Complex c);
  static Poly monomial(int degree, Complex c = 1.0);
  /// lead * prod (z - root)
  static Poly from_roots(std::span<const Complex> roots, Complex lead = 1.0);

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  /// Coefficient of z^k (zero beyond the degree).
  Complex operator[](int k) const;
  Complex leading() const;
  double max_abs() const;

  Complex eval(Complex z) const;
  Poly derivative() const;
  /// Coefficients of h -> p(at + h).
  Poly taylor_shift(Complex at) const;
  Poly conj_coeffs() const;
  Poly monic() const;

  /// Drops trailing coefficients with modulus <= rel_eps * max_abs().
  Poly& trim(double rel_eps);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(Complex c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= -1.0; }
  friend Poly operator*(Poly a, Complex c) { return a *= c; }
  friend Poly operator*(Complex c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  void drop_exact_zeros();
  std::vector<Complex> coeffs_;
};

/// Quotient and remainder; the remainder is trimmed at rel_eps relative to the
/// dividend so that its degree is below b's.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, double rel_eps = 1e-13);

enum class Region { interior, boundary, exterior };

const char* to_string(Region r);
Region classify(Complex z, const ToleranceConfig& tol);

struct ZeroDatum {
  Complex location;
  int multiplicity = 1;
  Region region = Region::interior;
};

/// Raw eigenvalues of the companion matrix, without clustering.
std::vector<Complex> companion_roots(const Poly& p);

/// Roots with multiplicities. Roots closer than delta_cluster * max(1,|root|)
/// are merged into a single datum. Clusters up to 1e-3 apart are merged as
/// well when the merged point is an m-fold root of a polynomial within
/// relative coefficient distance eps_zero of p. A cluster of size m is located
/// at the Newton-polished root of p^(m-1) nearest its mean. Constant p gives
/// an empty list.
std::vector<ZeroDatum> roots(const Poly& p, const ToleranceConfig& tol);

struct BezoutResult {
  Poly gcd;  // monic
  Poly u;
  Poly v;
};

/// Extended Euclid: u*p + v*q = gcd. Throws IllConditioned when the residual
/// exceeds eps_bezout (relative to the input size).
BezoutResult bezout(const Poly& p, const Poly& q, const ToleranceConfig& tol);

}  // namespace rankone

#endif  // RANKONE_CPOLY_HPP_
