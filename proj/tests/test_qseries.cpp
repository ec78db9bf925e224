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

#include <string>

#include <doctest.h>

#include "stripcomb/classic.hpp"
#include "stripcomb/qseries.hpp"

using namespace stripcomb;

TEST_CASE("bracket basics") {
  CHECK_EQ(qint(3).str_compact(), "1+q+q^2");
  CHECK(qint(0).is_zero());
  CHECK(qbinom(5, 0).is_one());
  CHECK_EQ(qbinom(2, 1).str_compact(), "1+q");
  CHECK_EQ(qbinom(4, 2).eval(BigInt(1)), BigInt(6));
  CHECK(qbinom(3, 5).is_zero());
  CHECK(qbinom(3, -1).is_zero());
  for (long n = 0; n <= 16; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK_EQ(qbinom(n, k).eval(BigInt(1)), binom(n, k));
      CHECK(qbinom(n, k) == qbinom(n, n - k));
    }
}

TEST_CASE("pochhammer products") {
  CHECK(qpochhammer(1, 0).is_outer_constant());
  CHECK_EQ(qpochhammer(1, 2).str(), "(1) + (-1-q)*x + (q)*x^2");
  // (x;q)_3 at q = 1 is (1-x)^3.
  const QXPoly p = qpochhammer(1, 3);
  const Poly want = Poly::from_ints({1, -3, 3, -1}, 'x');
  for (int i = 0; i <= 3; ++i)
    CHECK_EQ(p.coeff(i).eval(BigInt(1)), want.coeff(i));
  CHECK_EQ(qpoch_general(2, 0, 3, 1).str(), "(1) + (-1-q^3)*x + (q^3)*x^2");
}

TEST_CASE("q-derivative") {
  const QXPoly x2 = QXPoly::monomial(Poly(1), 2, 'x');
  const QXPoly d = q_derivative(x2);
  CHECK_EQ(d.degree(), 1);
  CHECK_EQ(d.coeff(1).str_compact(), "1+q");
  CHECK(q_derivative(QXPoly(7)).is_zero());
  const QXPoly x3 = QXPoly::monomial(Poly(1), 3, 'x');
  CHECK_EQ(q_derivative(q_derivative(x3)).coeff(1), qint(3) * qint(2));
}

TEST_CASE("pentagonal-bracket instance") {
  const CheckReport r = q_identity_check("q:eq1.6", {{"n", 2}});
  CHECK(r.status == CheckStatus::kVerifiedUpTo);
  QPoly lhs;
  for (long k = 0; 2 * k <= 2; ++k)
    lhs += Poly::monomial(BigInt(1), static_cast<int>(k * k), 'q') *
           qbinom(2 - k, k);
  CHECK_EQ(lhs.str_compact(), "1+q");
}

TEST_CASE("registry sweep") {
  for (const std::string& id : q_identity_ids()) {
    const CheckReport r = q_identity_check(id);
    INFO(id << ": " << r.witness);
    CHECK(r.status == CheckStatus::kVerifiedUpTo);
    CHECK_FALSE(q_identity_grid(id).empty());
  }
  CHECK_THROWS_AS(q_identity_check("q:nonsense"), MathError);
}

TEST_CASE("derivative-quotient identity boundary") {
  // One step past the declared range the identity genuinely breaks: the
  // left side stays a nonzero polynomial while the right-side bracket
  // vanishes. At the edge it still holds with both sides zero.
  const CheckReport over =
      q_identity_check("q:eq2.51", {{"j", 1}, {"l", 3}, {"k", 1}});
  CHECK(over.status == CheckStatus::kCounterexample);
  const CheckReport edge =
      q_identity_check("q:eq2.51", {{"j", 1}, {"l", 2}, {"k", 1}});
  CHECK(edge.status == CheckStatus::kVerifiedUpTo);
}
