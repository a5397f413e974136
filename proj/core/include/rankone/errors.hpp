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

#ifndef RANKONE_ERRORS_HPP_
#define RANKONE_ERRORS_HPP_

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

/// A rational function was required to lie in Rat(D) but has poles in the
/// closed disc (or too close to it).
class PoleInDisc : public Error {
 public:
  explicit PoleInDisc(std::vector<std::complex<double>> poles);
  const std::vector<std::complex<double>>& poles() const { return poles_; }

 private:
  std::vector<std::complex<double>> poles_;
};

class PoleOnCircle : public Error {
 public:
  explicit PoleOnCircle(std::complex<double> pole);
  std::complex<double> pole;
};

class PoleAt : public Error {
 public:
  explicit PoleAt(std::complex<double> w);
  std::complex<double> point;
};

class IdenticallyZero : public Error {
 public:
  IdenticallyZero() : Error("function is identically zero") {}
};

class PhiZero : public Error {
 public:
  PhiZero() : Error("phi must be a nonzero element of Rat(D)") {}
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(std::complex<double> a);
};

class SingularBlock : public Error {
 public:
  using Error::Error;
};

class NotCircleInvertible : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

class TruncationUnsound : public Error {
 public:
  using Error::Error;
};

/// A decision depends on whether a zero sits inside or on the unit circle.
class BoundaryAmbiguous : public Error {
 public:
  using Error::Error;
};

std::string format_complex(std::complex<double> z);

}  // namespace rankone

#endif  // RANKONE_ERRORS_HPP_
