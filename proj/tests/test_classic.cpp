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

#include <doctest.h>

#include "stripcomb/classic.hpp"

using namespace stripcomb;

TEST_CASE("fibonacci and lucas numbers") {
  CHECK_EQ(fibonacci(-1), BigInt(1));
  CHECK_EQ(fibonacci(0), BigInt(0));
  CHECK_EQ(fibonacci(10), BigInt(55));
  CHECK_EQ(fibonacci(50), BigInt("12586269025"));
  CHECK_EQ(lucas_number(0), BigInt(2));
  CHECK_EQ(lucas_number(1), BigInt(1));
  CHECK_EQ(lucas_number(10), BigInt(123));
  for (long n = 1; n <= 30; ++n)
    CHECK_EQ(lucas_number(n), fibonacci(n - 1) + fibonacci(n + 1));
}

TEST_CASE("bivariate family basics") {
  const BiPoly x = BiPoly::variable('x');
  const BiPoly s = BiPoly(Poly::variable('s'));
  CHECK(fib_poly(0).is_zero());
  CHECK(fib_poly(1) == BiPoly(1));
  CHECK(fib_poly(4) == x * x * x + BiPoly(2) * x * s);
  CHECK(lucas_poly(0) == BiPoly(2));
  CHECK(lucas_poly(2) == x * x + BiPoly(2) * s);
  for (int n = 2; n <= 20; ++n) {
    CHECK(fib_poly(n) == x * fib_poly(n - 1) + s * fib_poly(n - 2));
    CHECK(lucas_poly(n) == x * lucas_poly(n - 1) + s * lucas_poly(n - 2));
  }
  // Specialization at (1, 1) reproduces the numbers.
  for (int n = 0; n <= 25; ++n) {
    CHECK_EQ(fib_at(n, Poly(1), Poly(1)).coeff(0), fibonacci(n));
    CHECK_EQ(lucas_at(n, Poly(1), Poly(1)).coeff(0), lucas_number(n));
  }
}

TEST_CASE("strip kernel polynomials") {
  const BiPoly x = BiPoly::variable('x');
  const BiPoly kernel =
      BiPoly(1) + BiPoly::monomial(Poly::from_ints({1, -1}, 't'), 2, 'x');
  CHECK(phi_poly(0).is_zero());
  CHECK(phi_poly(1) == BiPoly(1));
  CHECK(phi_poly(2) == kernel);
  CHECK(lambda_poly(0) == BiPoly(2));
  CHECK(lambda_poly(1) == kernel);
  for (int n = 2; n <= 12; ++n) {
    CHECK(phi_poly(n) ==
          kernel * phi_poly(n - 1) - x * x * phi_poly(n - 2));
    CHECK(lambda_poly(n) ==
          kernel * lambda_poly(n - 1) - x * x * lambda_poly(n - 2));
  }
}

TEST_CASE("combinatorial triangles") {
  CHECK_EQ(catalan(0), BigInt(1));
  CHECK_EQ(catalan(5), BigInt(42));
  CHECK_EQ(catalan(10), BigInt(16796));
  // Narayana rows refine Catalan.
  for (long n = 1; n <= 10; ++n) {
    BigInt row_sum = 0;
    for (long k = 1; k <= n; ++k) row_sum += narayana(n, k);
    CHECK_EQ(row_sum, catalan(n));
  }
  CHECK_EQ(narayana(4, 2), BigInt(6));
  // Eulerian rows sum to factorials and are symmetric.
  for (long n = 1; n <= 8; ++n) {
    BigInt row_sum = 0;
    for (long k = 0; k < n; ++k) {
      row_sum += eulerian(n, k);
      CHECK_EQ(eulerian(n, k), eulerian(n, n - 1 - k));
    }
    CHECK_EQ(row_sum, factorial(n));
  }
  CHECK_EQ(eulerian(4, 1), BigInt(11));
}

TEST_CASE("palindromic companion polynomials") {
  CHECK(r_poly(0) == Poly(1));
  CHECK(r_poly(1) == Poly::from_ints({1, 1, 1}, 'x'));
  CHECK(r_poly(2) == Poly::from_ints({1, 2, 4, 2, 1}, 'x'));
  for (int j = 0; j <= 8; ++j) {
    const Poly r = r_poly(j);
    CHECK_EQ(r.degree(), 2 * j);
    CHECK(r.reversed(2 * j) == r);  // palindromic
    CHECK_EQ(r.eval(BigInt(1)), binom(2 * j + 1, j));  // row sums
  }
}

TEST_CASE("identity registry runs clean") {
  const auto ids = identity_ids();
  CHECK_EQ(ids.size(), 18);
  for (const std::string& id : ids) {
    const CheckReport rep = identity_check(id);
    INFO(id, ": ", rep.witness);
    CHECK(rep.status == CheckStatus::kVerifiedUpTo);
  }
  CHECK_THROWS_AS(identity_check("eq0.0"), MathError);
  // Single-instance runs and grid access agree with the registry.
  CHECK(identity_check("eq2.33", {{"k", 3}}).status ==
        CheckStatus::kVerifiedUpTo);
  CHECK_FALSE(identity_grid("eq2.33").empty());
}

TEST_CASE("cosine root factorizations") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(factorization_check_float(RootFamily::kFib, k).status ==
          CheckStatus::kVerifiedUpTo);
    CHECK(factorization_check_float(RootFamily::kLucas, k).status ==
          CheckStatus::kVerifiedUpTo);
    CHECK(factorization_check_float(RootFamily::kFibDiff, k).status ==
          CheckStatus::kVerifiedUpTo);
  }
}
