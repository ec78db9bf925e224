// Copyright 2026 The stripcomb Authors
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

#include <stripcomb/formulas.hpp>

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace stripcomb {
namespace {

// Reflection indices beyond this bound contribute only vanishing binomials:
// a nonzero term needs (k+2)|j| <= n + 1.
long reflection_bound(long n, long k) { return n / (k + 2) + 1; }

// One inner row of the double sum: coefficients of t^l for the given j.
void add_weight_row(std::vector<BigInt>& cs, long n, long k, long j,
                    long sign) {
  const long a_top = floor_div(n + (k - 2) * j, 2);
  const long b_top = floor_div(n + 1 - (k - 2) * j, 2);
  const long l_max = static_cast<long>(cs.size()) - 1;
  for (long l = std::labs(j); l <= l_max; ++l) {
    BigInt term = binom(a_top, l - j) * binom(b_top, l + j);
    if (sign < 0)
      cs[static_cast<size_t>(l)] -= term;
    else
      cs[static_cast<size_t>(l)] += term;
  }
}

}  // namespace

BigInt a_count(long n, long k) {
  if (n < 0 || k < 0) throw MathError("a_count: indices must be nonnegative");
  const long jb = reflection_bound(n, k);
  BigInt total = 0;
  for (long j = -jb; j <= jb; ++j) {
    const BigInt term = binom(n, floor_div(n + (k + 2) * j, 2));
    if (j % 2 != 0)
      total -= term;
    else
      total += term;
  }
  assert(binom(n, floor_div(n + (k + 2) * (jb + 1), 2)) == 0);
  assert(binom(n, floor_div(n - (k + 2) * (jb + 1), 2)) == 0);
  return total;
}

Poly a_poly(long n, long k) {
  if (n < 0) throw MathError("a_poly: n must be nonnegative");
  if (k < 1) throw MathError("a_poly: stated for k >= 1 only");
  const long jb = reflection_bound(n, k);
  // Both binomial tops of a row sum to n, so t-degrees beyond n/2 vanish.
  std::vector<BigInt> cs(static_cast<size_t>((n + 1) / 2) + 1, BigInt(0));
  for (long j = -jb; j <= jb; ++j)
    add_weight_row(cs, n, k, j, j % 2 != 0 ? -1 : 1);
  assert(weight_row_is_zero(n, k, jb + 1));
  assert(weight_row_is_zero(n, k, -jb - 1));
  return Poly(cs, 't');
}

Laurent a_poly_z(long n, long k) {
  if (n < 0) throw MathError("a_poly_z: n must be nonnegative");
  if (k < 1) throw MathError("a_poly_z: stated for k >= 1 only");
  const long jb = reflection_bound(n, k);
  Laurent out;
  for (long j = -jb; j <= jb; ++j) {
    std::vector<BigInt> cs(static_cast<size_t>((n + 1) / 2) + 1, BigInt(0));
    add_weight_row(cs, n, k, j, 1);
    Poly row(cs, 't');
    if (!row.is_zero())
      out = out + Laurent::monomial(row, static_cast<int>(j));
  }
  return out;
}

BigInt v_closed(long n, long m, long k) {
  if (n < 0 || k < 0) throw MathError("v_closed: indices must be nonnegative");
  if (m < 0 || m > k + 2) throw MathError("v_closed: m out of range");
  const long jb = reflection_bound(n, k);
  BigInt total = 0;
  for (long j = -jb; j <= jb; ++j) {
    total += binom(n, floor_div(m + n, 2) + (k + 2) * j);
    total -= binom(n, floor_div(m + n + 1, 2) + (k + 2) * j);
  }
  return total;
}

double v_trig(long n, long m, long k) {
  if (m < 1 || m > k + 1) throw MathError("v_trig: m out of range");
  const double pi = std::acos(-1.0);
  const double denom = static_cast<double>(k) + 2.0;
  double total = 0.0;
  for (long l = 1; l <= k + 1; ++l) {
    const double theta = static_cast<double>(l) * pi / denom;
    total += std::sin(theta) * std::sin(static_cast<double>(m) * theta) *
             std::pow(2.0 * std::cos(theta), static_cast<double>(n));
  }
  return 2.0 / denom * total;
}

}  // namespace stripcomb
