/*
   Copyright 2026 the stripcomb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>

#include "stripcomb/poly.hpp"

namespace stripcomb {

// Element of the rational-function field Q(t), stored as a reduced pair
// of integer polynomials with positive leading denominator coefficient.
class FracPoly {
 public:
  FracPoly() : num_(0), den_(1) {}
  FracPoly(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  FracPoly(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FracPoly operator-() const;
  friend FracPoly operator+(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator-(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator/(const FracPoly& a, const FracPoly& b);
  bool operator==(const FracPoly& o) const;
  bool operator!=(const FracPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Poly num_, den_;
  void reduce();
};

// Uniform zero test used by the templated linear solver.
inline bool field_is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool field_is_zero(const FracPoly& v) { return v.is_zero(); }

}  // namespace stripcomb
