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

#include <map>
#include <string>
#include <vector>

#include "stripcomb/bipoly.hpp"
#include "stripcomb/report.hpp"

namespace stripcomb {

// Bivariate Fibonacci / Lucas families over Z[x, s]:
//   F(0) = 0, F(1) = 1, F(n) = x F(n-1) + s F(n-2)
//   L(0) = 2, L(1) = x, L(n) = x L(n-1) + s L(n-2)
// Outer variable 'x', inner variable 's'. Cached; n >= 0. The value
// F(-1) exists only in numeric form (fibonacci(-1) == 1); the symbolic
// index -1 is rejected because it is not polynomial in s.
const BiPoly& fib_poly(int n);
const BiPoly& lucas_poly(int n);

// Specialize the family at x = x0, s = s0 (same inner variable or
// constants), computed iteratively.
Poly fib_at(int n, const Poly& x0, const Poly& s0);
Poly lucas_at(int n, const Poly& x0, const Poly& s0);
// Same with bivariate substitution values.
BiPoly fib_at2(int n, const BiPoly& x0, const BiPoly& s0);
BiPoly lucas_at2(int n, const BiPoly& x0, const BiPoly& s0);

// Classical integer sequences; fibonacci accepts n >= -1 with
// fibonacci(-1) == 1.
BigInt fibonacci(long n);
BigInt lucas_number(long n);

// Strip-transfer kernel polynomials over Z[t][x]:
//   K(n) = (1 + (1-t) x^2) K(n-1) - x^2 K(n-2)
// with phi starting 0, 1 and lambda starting 2, 1 + (1-t)x^2. These are
// the F / L families specialized at (1 + (1-t)x^2, -x^2). Cached; n >= 0.
const BiPoly& phi_poly(int n);
const BiPoly& lambda_poly(int n);

BigInt catalan(long n);
// N(n, k) = C(n, k-1) C(n, k) / n for 1 <= k <= n.
BigInt narayana(long n, long k);
// Ascent-count triangle: rows n >= 1, entries k = 0..n-1, row 1 = (1).
BigInt eulerian(long n, long k);

// Palindromic companion polynomial of degree 2j:
//   sum_l C(j,l)^2 x^(2l) + sum_l C(j,l) C(j,l-1) x^(2l-1).
Poly r_poly(int j);

// Exact verification of a registered polynomial/series identity.
// With empty params the full declared grid runs; otherwise the given
// instance. Unknown ids throw MathError.
CheckReport identity_check(const std::string& id,
                           const std::map<std::string, long>& params = {});
std::vector<std::string> identity_ids();

// Declared verification grid of one identity, as parameter tuples in run
// order. Lets drivers filter or parallelize over cells.
std::vector<std::map<std::string, long>> identity_grid(const std::string& id);

enum class RootFamily { kFib, kLucas, kFibDiff };

// Float check that the claimed cosine roots annihilate the polynomial:
//   kFib     F(k+1) at s = -1, roots 2cos(j pi / (k+1)), 1 <= j <= k
//   kLucas   L(k)   at s = -1, roots 2cos((2j+1) pi / (2k)), 0 <= j < k
//   kFibDiff F(k+1) - F(k) at s = -1, roots 2cos((2j+1) pi / (2k+1))
// Passes when every |value| < 1e-9 * (1 + max |coefficient|).
CheckReport factorization_check_float(RootFamily family, int k);

}  // namespace stripcomb
