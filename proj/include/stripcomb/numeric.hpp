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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stripcomb {

using BigInt = mpz_class;
using Rational = mpq_class;

// All exact-arithmetic failures (tag mismatches, non-exact division,
// out-of-range indices) throw this.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// binomial(n, k) with the out-of-range convention: 0 whenever k < 0,
// k > n, or n < 0.
BigInt binom(long n, long k);

BigInt factorial(long n);

// Integer power with exact big-integer result; e >= 0.
BigInt ipow(const BigInt& base, unsigned long e);
BigInt ipow(long base, unsigned long e);

// Floor division for possibly-negative numerators, denominator > 0.
long floor_div(long a, long b);

// Conversion guarded against overflow.
long to_long_checked(const BigInt& v);

std::string bigint_str(const BigInt& v);

}  // namespace stripcomb
