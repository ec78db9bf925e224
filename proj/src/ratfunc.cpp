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

#include "stripcomb/ratfunc.hpp"

#include <utility>

namespace stripcomb {

RatFunc::RatFunc(BiPoly num, BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("RatFunc: zero denominator");
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::reciprocal() const {
  if (num_.is_zero()) throw MathError("RatFunc::reciprocal: zero numerator");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::negate_var() const {
  return RatFunc(num_.negate_outer(), den_.negate_outer());
}

RatFunc RatFunc::at_inner(const BigInt& v) const {
  return RatFunc(num_.at_inner(v), den_.at_inner(v));
}

bool RatFunc::equivalent(const RatFunc& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string RatFunc::str() const {
  return "[" + num_.str() + "] / [" + den_.str() + "]";
}

}  // namespace stripcomb
