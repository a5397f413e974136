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

#include <cstdio>
#include <sstream>

#include "rankone/errors.hpp"
#include "rankone/tolerance.hpp"

namespace rankone {

std::string format_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

namespace {

std::string pole_list(const std::vector<std::complex<double>>& poles) {
  std::ostringstream os;
  os << "poles in the closed unit disc:";
  for (const auto& p : poles) os << ' ' << format_complex(p);
  return os.str();
}

}  // namespace

PoleInDisc::PoleInDisc(std::vector<std::complex<double>> poles)
    : Error(pole_list(poles)), poles_(std::move(poles)) {}

PoleOnCircle::PoleOnCircle(std::complex<double> p)
    : Error("pole on the unit circle at " + format_complex(p)), pole(p) {}

PoleAt::PoleAt(std::complex<double> w)
    : Error("function has a pole at " + format_complex(w)), point(w) {}

UnknownNode::UnknownNode(std::complex<double> a)
    : Error("not a registered zero of phi: " + format_complex(a)) {}

std::vector<std::pair<std::string, double*>> ToleranceConfig::fields() {
  return {{"eps_zero", &eps_zero},           {"delta_cluster", &delta_cluster},
          {"delta_boundary", &delta_boundary}, {"tau_pole", &tau_pole},
          {"tau_ord", &tau_ord},             {"tau_unit", &tau_unit},
          {"eps_bezout", &eps_bezout},       {"eps_witness", &eps_witness},
          {"sigma_svd", &sigma_svd},         {"delta_match", &delta_match}};
}

std::vector<std::pair<std::string, double>> ToleranceConfig::fields() const {
  auto copy = *this;
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [name, ptr] : copy.fields()) out.emplace_back(name, *ptr);
  return out;
}

void ToleranceConfig::validate() const {
  for (const auto& [name, value] : fields()) {
    if (!(value > 0.0)) throw Error("tolerance " + name + " must be strictly positive");
  }
}

}  // namespace rankone
