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

#include "stripcomb/numeric.hpp"

#include <climits>

namespace stripcomb {

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw MathError("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

long floor_div(long a, long b) {
  if (b <= 0) throw MathError("floor_div: denominator must be positive");
  long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

long to_long_checked(const BigInt& v) {
  if (!v.fits_slong_p()) throw MathError("to_long_checked: out of range");
  return mpz_get_si(v.get_mpz_t());
}

std::string bigint_str(const BigInt& v) { return v.get_str(); }

}  // namespace stripcomb
