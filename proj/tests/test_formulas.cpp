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

#include <cmath>
#include <cstdlib>

#include <doctest.h>

#include "stripcomb/classic.hpp"
#include "stripcomb/formulas.hpp"
#include "stripcomb/paths.hpp"

using namespace stripcomb;

TEST_CASE("closed count vs enumeration") {
  for (long k = 1; k <= 6; ++k)
    for (long n = 0; n <= 12; ++n)
      CHECK_EQ(a_count(n, k),
               BigInt(enumerate_strip(static_cast<int>(n),
                                      static_cast<int>(k))
                          .size()));
  CHECK_EQ(a_count(7, 4), BigInt(27));
  // Width 0 pins every path to the single alternating one or nothing.
  CHECK_EQ(a_count(0, 0), BigInt(1));
}

TEST_CASE("closed count special columns") {
  for (long n = 0; n <= 30; ++n) {
    CHECK_EQ(a_count(n, 1), BigInt(1));
    CHECK_EQ(a_count(n, 2), ipow(BigInt(2), static_cast<unsigned long>(n / 2)));
    CHECK_EQ(a_count(n, 3), fibonacci(n + 1));
  }
  for (long n = 0; n <= 15; ++n) {
    CHECK_EQ(a_count(2 * n + 1, 4),
             ipow(BigInt(3), static_cast<unsigned long>(n)));
    CHECK_EQ(a_count(2 * n + 2, 4),
             BigInt(2) * ipow(BigInt(3), static_cast<unsigned long>(n)));
  }
  // Tight strips: one fewer than the central binomial.
  for (long k = 1; k <= 8; ++k)
    CHECK_EQ(a_count(2 * k + 1, 2 * k), binom(2 * k + 1, k) - 1);
}

TEST_CASE("weight polynomial closed form") {
  CHECK_EQ(a_poly(6, 3).str(), "1 + 5*t + 6*t^2 + t^3");
  CHECK_THROWS_AS(a_poly(4, 0), MathError);
  for (long k = 1; k <= 6; ++k)
    for (long n = 0; n <= 13; ++n) {
      const Poly lhs = a_poly(n, k);
      CHECK(lhs == weight_poly_bruteforce(static_cast<int>(n),
                                          static_cast<int>(k)));
      CHECK_EQ(lhs.eval(BigInt(1)), a_count(n, k));
      if (k > 1 && n >= 2) CHECK_EQ(lhs.degree(), static_cast<int>(n / 2));
    }
  // Wide strips never clip: degree-n/2 row independent of k.
  for (long n = 0; n <= 10; ++n)
    CHECK(a_poly(n, n + 2) == a_poly(n, n + 5));
  // Width 1 leaves no room for extremal points.
  for (long n = 0; n <= 20; ++n) CHECK(a_poly(n, 1).is_one());
  // Width 2 doubles at even lengths.
  for (long n = 0; n <= 16; ++n) {
    Poly expect = Poly(1);
    const Poly onet = Poly::from_ints({1, 1}, 't');
    for (long i = 0; i < n / 2; ++i) expect = expect * onet;
    CHECK(a_poly(n, 2) == expect);
  }
  // Width 3 is the bivariate Fibonacci at (1, t).
  for (long n = 0; n <= 16; ++n)
    CHECK(a_poly(n, 3) ==
          fib_at(static_cast<int>(n) + 1, Poly(1), Poly::variable('t')));
}

TEST_CASE("z-graded refinement") {
  CHECK_EQ(a_poly_z(5, 3).str(), "(t)*z^-1 + (1+6*t+3*t^2) + (t)*z");
  for (long k = 1; k <= 5; ++k)
    for (long n = 0; n <= 12; ++n) {
      const Laurent zl = a_poly_z(n, k);
      CHECK(zl.eval_pm1(-1) == a_poly(n, k));
      // t = 1 slice of the z^j coefficient is a single binomial.
      const Laurent att = zl.at_coeff_var(BigInt(1));
      for (int e = att.minexp(); e <= att.maxexp(); ++e) {
        const BigInt want = binom(n, floor_div(n + (k + 2) * e, 2));
        CHECK_EQ(att.coeff(e).eval(BigInt(1)), want);
      }
    }
  // Marker sum: all coefficients at t = z = 1.
  CHECK_EQ(a_poly_z(7, 4).eval_pm1(1).eval(BigInt(1)), [] {
    BigInt s = 0;
    for (long j = -10; j <= 10; ++j) s += binom(7, floor_div(7 + 6 * j, 2));
    return s;
  }());
}

TEST_CASE("walk count closed form and boundary zeros") {
  CHECK_EQ(v_closed(7, 2, 3), BigInt(13));
  CHECK_EQ(v_closed(5, 2, 3), BigInt(5));
  CHECK_EQ(v_closed(6, 2, 3), BigInt(0));
  for (long k = 1; k <= 8; ++k)
    for (long n = 0; n <= 20; ++n) {
      const auto dp = walk_counts(static_cast<int>(n), static_cast<int>(k));
      for (long m = 1; m <= k + 1; ++m)
        CHECK_EQ(v_closed(n, m, k), dp[static_cast<size_t>(m - 1)]);
      CHECK_EQ(v_closed(n, 0, k), BigInt(0));
      CHECK_EQ(v_closed(n, k + 2, k), BigInt(0));
    }
}

TEST_CASE("trigonometric walk count") {
  for (long k = 1; k <= 8; ++k)
    for (long n = 0; n <= 30; ++n)
      for (long m = 1; m <= k + 1; ++m) {
        const double exact = BigInt(v_closed(n, m, k)).get_d();
        const double trig = v_trig(n, m, k);
        const double scale = std::max(1.0, std::fabs(exact));
        CHECK(std::fabs(trig - exact) <= 1e-6 * scale);
      }
}
