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

#ifndef RANKONE_TOLERANCE_HPP_
#define RANKONE_TOLERANCE_HPP_

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace rankone {

using Complex = std::complex<double>;

/// Every numerical threshold used by the library. Passed explicitly to each
/// operation that needs one.
struct ToleranceConfig {
  double eps_zero = 1e-12;       // relative coefficient trimming
  double delta_cluster = 1e-7;   // root clustering radius (times max(1,|root|))
  double delta_boundary = 1e-9;  // width of the unit-circle band
  double tau_pole = 1e-8;        // required gap |p| >= 1 + tau_pole
  double tau_ord = 1e-7;         // relative threshold for nonvanishing derivatives
  double tau_unit = 1e-8;        // |Gamma_-(a;t) - 1| must exceed this
  double eps_bezout = 1e-9;      // Bezout residual bound
  double eps_witness = 1e-8;     // witness residual, relative to |s| + 1
  double sigma_svd = 1e-6;       // singular values below this count as kernel
  double delta_match = 1e-6;     // zero-multiset matching radius

  /// Throws rankone::Error if any field is not strictly positive.
  void validate() const;

  /// (name, value) pairs in a fixed order; used by reports and CLI flags.
  std::vector<std::pair<std::string, double*>> fields();
  std::vector<std::pair<std::string, double>> fields() const;
};

}  // namespace rankone

#endif  // RANKONE_TOLERANCE_HPP_
