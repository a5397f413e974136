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

// JSON and text encodings of rational functions, matrices and tolerances.
//
// A rational function is {"num": [[re, im], ...], "den": [[re, im], ...]}
// with ascending coefficients. Reports add an exact partial-fraction block
//   "poly": [[re, im], ...], "poles": [{"at": [re, im], "coeffs": [...]}, ...]
// where coeffs[j-1] multiplies (z - at)^-j; when present it takes precedence
// over num/den on input, so printed functions re-parse without root finding.

#ifndef RANKONE_CLI_JSON_IO_HPP_
#define RANKONE_CLI_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "rankone/operators.hpp"

namespace rankone::cli {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex c);
/// Accepts [re, im] or a plain number.
Complex complex_from_json(const Json& j);

Json ratfunc_to_json(const RatFunc& f, bool pretty = false);
RatFunc ratfunc_from_json(const Json& j, const ToleranceConfig& tol);

std::string render_complex(Complex c);
std::string render_poly(const Poly& p);
/// "num / den" with a monic denominator, or just the polynomial.
std::string render(const RatFunc& f);

Json zero_to_json(const ZeroDatum& z);
Json tolerances_to_json(const ToleranceConfig& tol);

/// {"dimension": N, "window": W, "entries": [[[re, im], ...], ...]}
Json matrix_to_json(const TruncatedOperator& op);
/// "# dimension=N,window=W", a header re_0,im_0,...,re_{N-1},im_{N-1}, then
/// one line per row.
std::string matrix_to_csv(const TruncatedOperator& op);

}  // namespace rankone::cli

#endif  // RANKONE_CLI_JSON_IO_HPP_
