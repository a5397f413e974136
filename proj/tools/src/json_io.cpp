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

#include "rankone/cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <span>
#include <sstream>

namespace rankone::cli {

namespace {

Json coeff_array(std::span<const Complex> c) {
  Json a = Json::array();
  for (Complex x : c) a.push_back(complex_to_json(x));
  return a;
}

std::vector<Complex> coeffs_from_json(const Json& j) {
  if (!j.is_array()) throw Error("coefficient list must be a JSON array");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error("complex number must be [re, im] or a number, got " + j.dump());
}

Json ratfunc_to_json(const RatFunc& f, bool pretty) {
  Json j;
  j["num"] = coeff_array(f.numerator().coeffs());
  j["den"] = coeff_array(f.denominator().coeffs());
  j["poly"] = coeff_array(f.poly_part().coeffs());
  Json poles = Json::array();
  for (const auto& t : f.pole_terms()) {
    Json p;
    p["at"] = complex_to_json(t.pole);
    p["coeffs"] = coeff_array(t.coeffs);
    poles.push_back(std::move(p));
  }
  j["poles"] = std::move(poles);
  if (pretty) j["text"] = render(f);
  return j;
}

RatFunc ratfunc_from_json(const Json& j, const ToleranceConfig& tol) {
  if (!j.is_object()) throw Error("rational function must be a JSON object");
  if (j.contains("poles")) {
    Poly poly = j.contains("poly") ? Poly(coeffs_from_json(j.at("poly"))) : Poly();
    std::vector<PoleTerm> terms;
    for (const auto& p : j.at("poles")) terms.push_back({complex_from_json(p.at("at")), coeffs_from_json(p.at("coeffs"))});
    return RatFunc(std::move(poly), std::move(terms));
  }
  if (!j.contains("num")) throw Error("rational function needs \"num\" (and optionally \"den\")");
  const Poly num(coeffs_from_json(j.at("num")));
  const Poly den = j.contains("den") ? Poly(coeffs_from_json(j.at("den"))) : Poly::constant(1.0);
  if (den.is_zero()) throw DivisionByZero();
  return RatFunc::from_num_den(num, den, tol);
}

std::string render_complex(Complex c) {
  if (c.imag() == 0.0) return fmt(c.real());
  if (c.real() == 0.0) return fmt(c.imag()) + "i";
  return "(" + fmt(c.real()) + (c.imag() < 0 ? " - " : " + ") + fmt(std::abs(c.imag())) + "i)";
}

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Complex c = p[k];
    if (c == Complex(0.0)) continue;
    bool negative = false;
    if (c.imag() == 0.0 && c.real() < 0.0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == Complex(1.0);
    if (k == 0 || !unit) os << render_complex(c);
    if (k >= 1) os << (unit ? "" : "*") << "z";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::string render(const RatFunc& f) {
  const Poly den = f.denominator();
  if (den.degree() <= 0) return render_poly(f.numerator());
  return "(" + render_poly(f.numerator()) + ") / (" + render_poly(den) + ")";
}

Json zero_to_json(const ZeroDatum& z) {
  Json j;
  j["location"] = complex_to_json(z.location);
  j["multiplicity"] = z.multiplicity;
  j["region"] = to_string(z.region);
  return j;
}

Json tolerances_to_json(const ToleranceConfig& tol) {
  Json j;
  for (const auto& [name, value] : tol.fields()) j[name] = value;
  return j;
}

Json matrix_to_json(const TruncatedOperator& op) {
  Json j;
  j["dimension"] = op.N;
  j["window"] = op.window;
  Json rows = Json::array();
  for (int i = 0; i < op.matrix.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < op.matrix.cols(); ++k) row.push_back(complex_to_json(op.matrix(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

std::string matrix_to_csv(const TruncatedOperator& op) {
  std::ostringstream os;
  os << "# dimension=" << op.N << ",window=" << op.window << "\n";
  for (int k = 0; k < op.matrix.cols(); ++k) os << (k ? "," : "") << "re_" << k << ",im_" << k;
  os << "\n";
  char buf[64];
  for (int i = 0; i < op.matrix.rows(); ++i) {
    for (int k = 0; k < op.matrix.cols(); ++k) {
      const Complex c = op.matrix(i, k);
      std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", k ? "," : "", c.real(), c.imag());
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace rankone::cli
