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

#include "stripcomb/bipoly.hpp"

namespace stripcomb {

// Rational function num/den in the outer (series) variable, coefficients
// in Z[t]. Not reduced to lowest terms; equality is by cross-multiplying,
// which is exact and avoids bivariate gcd work.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(BiPoly num, BiPoly den);
  static RatFunc from_poly(BiPoly p) { return RatFunc(std::move(p), BiPoly(1)); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);

  // 1/f; requires a nonzero numerator.
  RatFunc reciprocal() const;
  // Substitute the series variable by -itself.
  RatFunc negate_var() const;
  // Substitute the inner variable by a constant.
  RatFunc at_inner(const BigInt& v) const;

  // a/b == c/d exactly when a*d == c*b.
  bool equivalent(const RatFunc& o) const;

  std::string str() const;

 private:
  BiPoly num_, den_;
};

// A generating function together with the label it is reported under.
struct NamedGF {
  std::string label;
  RatFunc gf;
};

}  // namespace stripcomb
