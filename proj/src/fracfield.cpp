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

#include "stripcomb/fracfield.hpp"

#include <utility>

namespace stripcomb {

FracPoly::FracPoly(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("FracPoly: zero denominator");
  reduce();
}

void FracPoly::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  BigInt cn = num_.content();
  BigInt cd = den_.content();
  BigInt c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c > 1) {
    num_ = num_.exact_div(Poly(c));
    den_ = den_.exact_div(Poly(c));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

FracPoly FracPoly::operator-() const {
  FracPoly r(*this);
  r.num_ = -r.num_;
  return r;
}

FracPoly operator+(const FracPoly& a, const FracPoly& b) {
  return FracPoly(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FracPoly operator-(const FracPoly& a, const FracPoly& b) {
  return FracPoly(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  return FracPoly(a.num_ * b.num_, a.den_ * b.den_);
}

FracPoly operator/(const FracPoly& a, const FracPoly& b) {
  if (b.is_zero()) throw MathError("FracPoly: division by zero");
  return FracPoly(a.num_ * b.den_, a.den_ * b.num_);
}

bool FracPoly::operator==(const FracPoly& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string FracPoly::str() const {
  if (den_.is_one()) return num_.str_compact();
  return "(" + num_.str_compact() + ")/(" + den_.str_compact() + ")";
}

}  // namespace stripcomb
