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

#include <vector>

#include "stripcomb/laurent.hpp"
#include "stripcomb/ratfunc.hpp"

namespace stripcomb {

// Coefficients 0..order of the power-series expansion of f around 0.
// The denominator's constant term must be an integer constant whose
// every quotient stays integral; all our generating functions have
// constant term +-1, so this never rounds.
//
// inner_trunc >= 0 truncates each coefficient to that degree in the
// inner variable as the recurrence runs. Sound because multiplication
// never lowers inner degrees, so dropped terms cannot feed back below
// the cutoff.
std::vector<Poly> series_expand(const RatFunc& f, int order,
                                int inner_trunc = -1);

// Same, for series whose coefficients are integers.
std::vector<BigInt> series_numbers(const RatFunc& f, int order);

// Dense polynomial in the series variable with Laurent coefficients,
// for generating functions that carry an extra invertible marker.
class XLaurent {
 public:
  XLaurent() = default;
  XLaurent(Laurent c);  // NOLINT: constant term
  explicit XLaurent(std::vector<Laurent> coeffs);

  // Embed a bivariate polynomial; its inner coefficients land at z^0.
  static XLaurent from_bipoly(const BiPoly& p);
  static XLaurent monomial(Laurent c, int exp);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Laurent& coeff(int i) const;

  XLaurent operator-() const;
  XLaurent& operator+=(const XLaurent& o);
  XLaurent& operator-=(const XLaurent& o);
  friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
  friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
  friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
  bool operator==(const XLaurent& o) const { return c_ == o.c_; }

  XLaurent scaled(const Laurent& s) const;
  XLaurent shifted(int k) const;

 private:
  std::vector<Laurent> c_;
  void normalize();
};

// Rational function in the series variable over Laurent coefficients.
// The denominator's constant term must be a unit monomial (+-z^e); the
// caller arranges that by clearing inverse powers beforehand.
struct ZRatFunc {
  XLaurent num, den;
};

std::vector<Laurent> zseries_expand(const ZRatFunc& f, int order);

}  // namespace stripcomb
