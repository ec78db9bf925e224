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

#include <random>
#include <vector>

#include <doctest.h>

#include "stripcomb/bipoly.hpp"
#include "stripcomb/fracfield.hpp"
#include "stripcomb/laurent.hpp"
#include "stripcomb/matrix.hpp"
#include "stripcomb/numeric.hpp"
#include "stripcomb/poly.hpp"
#include "stripcomb/ratfunc.hpp"
#include "stripcomb/series.hpp"

using namespace stripcomb;

namespace {

Poly random_poly(std::mt19937& rng, char var, int max_deg = 12) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<long> coeff(-9, 9);
  const int d = deg(rng);
  if (d < 0) return Poly();
  std::vector<BigInt> c(static_cast<size_t>(d) + 1);
  for (BigInt& v : c) v = coeff(rng);
  return Poly(std::move(c), var);
}

BiPoly random_bipoly(std::mt19937& rng, int max_outer = 4) {
  std::uniform_int_distribution<int> deg(-1, max_outer);
  const int d = deg(rng);
  if (d < 0) return BiPoly();
  std::vector<Poly> c(static_cast<size_t>(d) + 1);
  for (Poly& v : c) v = random_poly(rng, 't', 3);
  return BiPoly(std::move(c), 'x');
}

// Cofactor expansion along the first row; the reference for det_exact.
BiPoly det_cofactor(const Matrix& m) {
  const int n = m.rows();
  if (n == 1) return m.at(0, 0);
  BiPoly acc;
  for (int c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int cc = 0, w = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor.at(r - 1, w++) = m.at(r, cc);
      }
    const BiPoly term = m.at(0, c) * det_cofactor(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("numeric helpers") {
  CHECK_EQ(binom(5, 2), BigInt(10));
  CHECK_EQ(binom(5, 0), BigInt(1));
  CHECK(binom(5, 6) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(-2, 0) == 0);
  CHECK_EQ(factorial(6), BigInt(720));
  CHECK_EQ(ipow(3, 7), BigInt(2187));
  CHECK_EQ(ipow(BigInt(10), 20), BigInt("100000000000000000000"));
  CHECK_EQ(floor_div(7, 2), 3);
  CHECK_EQ(floor_div(-7, 2), -4);
  CHECK_EQ(floor_div(-8, 2), -4);
  CHECK_EQ(to_long_checked(BigInt(-42)), -42);
  CHECK_THROWS_AS(to_long_checked(ipow(BigInt(2), 80)), MathError);
  CHECK_EQ(bigint_str(ipow(BigInt(2), 64)), "18446744073709551616");
}

TEST_CASE("poly ring axioms on random inputs") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng, 'x');
    const Poly b = random_poly(rng, 'x');
    const Poly c = random_poly(rng, 'x');
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + Poly() == a);
    CHECK((a * Poly(1)) == a);
    // Evaluation is a ring homomorphism.
    const BigInt v(3);
    CHECK_EQ((a * b + c).eval(v), a.eval(v) * b.eval(v) + c.eval(v));
  }
}

TEST_CASE("poly structural operations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng, 'x');
    const Poly b = random_poly(rng, 'x');
    if (!b.is_zero()) {
      CHECK((a * b).exact_div(b) == a);
      CHECK((a * b).divisible_by(b));
    }
    const int n = a.degree() + 3;
    CHECK(a.reversed(n).reversed(n) == a);
    CHECK(a.shifted(2) == a * Poly::monomial(BigInt(1), 2, 'x'));
    CHECK(a.pow(2) == a * a);
    // gcd contains any common primitive factor.
    Poly common = random_poly(rng, 'x', 4);
    if (!common.is_zero()) {
      const BigInt cont = common.content();
      common = common.exact_div(Poly(cont));
      const Poly g = poly_gcd(a * common, b * common);
      if (!a.is_zero() && !b.is_zero()) CHECK(g.divisible_by(common));
    }
  }
  CHECK_THROWS_AS(Poly::from_ints({1, 1}, 'x').exact_div(
                      Poly::from_ints({0, 1}, 'x')),
                  MathError);
  CHECK_THROWS_AS(Poly::variable('x') + Poly::variable('t'), MathError);
}

TEST_CASE("poly text forms") {
  CHECK_EQ(Poly::from_ints({1, 4, 3}, 't').str(), "1 + 4*t + 3*t^2");
  CHECK_EQ(Poly::from_ints({1, 4, 3}, 't').str_compact(), "1+4*t+3*t^2");
  CHECK_EQ(Poly().str(), "0");
  CHECK_EQ(Poly::from_ints({2, 0, 0, -1}, 't').str(), "2 - t^3");
  CHECK_EQ(Poly::from_ints({0, -1, 0, 2}, 'x').str(), "-x + 2*x^3");
  CHECK_EQ(Poly(-7).str(), "-7");
}

TEST_CASE("poly calculus and substitution") {
  const Poly x = Poly::variable('x');
  const Poly p = Poly::from_ints({1, 2, 3}, 'x');  // 1 + 2x + 3x^2
  CHECK(p.derivative() == Poly::from_ints({2, 6}, 'x'));
  CHECK(Poly(5).derivative().is_zero());
  // p(x+1) at 2 equals p(3)
  const Poly shifted_arg = p.subst(x + Poly(1));
  CHECK_EQ(shifted_arg.eval(BigInt(2)), p.eval(BigInt(3)));
  CHECK_EQ(p.eval_double(0.5), doctest::Approx(1.0 + 1.0 + 0.75));
  CHECK_EQ(p.truncated(1), Poly::from_ints({1, 2}, 'x'));
  CHECK_EQ(p.coeff(9), BigInt(0));
  CHECK_EQ(p.leading(), BigInt(3));
  CHECK_EQ((p - p).content(), BigInt(0));
  CHECK_EQ(Poly::from_ints({4, -6}, 'x').content(), BigInt(2));
}

TEST_CASE("bipoly arithmetic and substitution") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const BiPoly a = random_bipoly(rng);
    const BiPoly b = random_bipoly(rng);
    const BiPoly c = random_bipoly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    // Evaluating both variables commutes with substitution order.
    const BigInt x0(2), t0(-3);
    CHECK_EQ(a.eval_outer(x0).eval(t0),
             a.at_inner(t0).eval_outer(x0).coeff(0));
    if (!b.is_zero()) {
      CHECK((a * b).exact_div(b) == a);
      CHECK((a * b).divisible_by(b));
    }
  }
  const BiPoly q =
      BiPoly(1) + BiPoly::monomial(Poly::from_ints({1, 1}, 't'), 2, 'x');
  CHECK_EQ(q.str(), "(1) + (1+t)*x^2");
  CHECK(q.negate_outer() == q);  // even powers only
  const BiPoly lin = BiPoly::variable('x') + BiPoly(1);
  CHECK(lin.negate_outer() == BiPoly(1) - BiPoly::variable('x'));
  CHECK_THROWS_AS(q.collapse(), MathError);
  CHECK_EQ((BiPoly(3) + BiPoly::monomial(Poly(2), 1, 'x')).collapse(),
           Poly::from_ints({3, 2}, 'x'));
  // p(x^2) via subst_outer
  const BiPoly sq = BiPoly::variable('x') * BiPoly::variable('x');
  CHECK_EQ(lin.subst_outer(sq).degree(), 2);
}

TEST_CASE("laurent basics") {
  const Laurent z = Laurent::variable();
  const Laurent zi = z.inverted();
  CHECK_EQ(zi.minexp(), -1);
  const Laurent s = z + zi;
  const Laurent sq = s * s;
  CHECK_EQ(sq.coeff_int(0), BigInt(2));
  CHECK_EQ(sq.coeff_int(2), BigInt(1));
  CHECK_EQ(sq.coeff_int(-2), BigInt(1));
  CHECK_EQ(sq.minexp(), -2);
  CHECK_EQ(sq.maxexp(), 2);
  CHECK_EQ(sq.eval_pm1(1), Poly(4));
  CHECK_EQ(sq.eval_pm1(-1), Poly(4));
  CHECK_EQ(s.eval_pm1(-1), Poly(-2));
  CHECK(sq.zshift(2).minexp() == 0);
  CHECK(sq.zshift(2).coeff(4) == Poly(1));

  int e = 0, sign = 0;
  CHECK(Laurent::monomial(Poly(-1), 3).is_unit_monomial(&e, &sign));
  CHECK_EQ(e, 3);
  CHECK_EQ(sign, -1);
  CHECK_FALSE(s.is_unit_monomial());
  const Laurent u = Laurent::monomial(Poly(1), -2);
  CHECK(s.unit_div(u) == s.zshift(2));

  const Laurent weighted = Laurent::monomial(Poly::from_ints({0, 2}, 't'), 1);
  CHECK_EQ(weighted.at_coeff_var(BigInt(3)).coeff_int(1), BigInt(6));
  CHECK(weighted.scaled(Poly::from_ints({0, 1}, 't')).coeff(1) ==
        Poly::from_ints({0, 0, 2}, 't'));
}

TEST_CASE("series expansion of rational functions") {
  const BiPoly x = BiPoly::variable('x');
  // 1/(1 - x - x^2): Fibonacci shifted by one.
  const RatFunc fib_gf(BiPoly(1), BiPoly(1) - x - x * x);
  const auto fib_terms = series_numbers(fib_gf, 12);
  CHECK_EQ(fib_terms[0], BigInt(1));
  CHECK_EQ(fib_terms[11], BigInt(144));
  // 1/(1 - (1+t) x): rows are (1+t)^n.
  const Poly one_plus_t = Poly::from_ints({1, 1}, 't');
  const RatFunc geo(BiPoly(1), BiPoly(1) - BiPoly::monomial(one_plus_t, 1, 'x'));
  const auto rows = series_expand(geo, 6);
  CHECK(rows[5] == one_plus_t.pow(5));
  // Inner truncation keeps only the low t-degrees but exactly.
  const auto low = series_expand(geo, 6, 1);
  CHECK_EQ(low[5].coeff(1), BigInt(5));
  CHECK_EQ(low[5].degree(), 1);
}

TEST_CASE("ratfunc algebra") {
  const BiPoly x = BiPoly::variable('x');
  const RatFunc a(BiPoly(1), BiPoly(1) - x);
  const RatFunc b(BiPoly(1), BiPoly(1) + x);
  // 1/(1-x) + 1/(1+x) = 2/(1-x^2)
  const RatFunc two(BiPoly(2), BiPoly(1) - x * x);
  CHECK((a + b).equivalent(two));
  CHECK((a * b).equivalent(RatFunc(BiPoly(1), BiPoly(1) - x * x)));
  CHECK(a.reciprocal().equivalent(RatFunc(BiPoly(1) - x, BiPoly(1))));
  CHECK(a.negate_var().equivalent(b));
  CHECK_FALSE(a.equivalent(b));
  const RatFunc diff = a - b;
  CHECK(diff.equivalent(RatFunc(x * BiPoly(2), BiPoly(1) - x * x)));
}

TEST_CASE("zseries expansion with marker coefficients") {
  // 1/(1 - x (z + 1/z)) has rows (z + 1/z)^n: central binomials.
  const Laurent s = Laurent::variable() + Laurent::variable().inverted();
  ZRatFunc f;
  f.num = XLaurent(Laurent(Poly(1)));
  f.den = XLaurent(Laurent(Poly(1))) - XLaurent::monomial(s, 1);
  const auto rows = zseries_expand(f, 8);
  CHECK_EQ(rows[4].coeff_int(0), BigInt(6));
  CHECK_EQ(rows[4].coeff_int(2), BigInt(4));
  CHECK_EQ(rows[4].coeff_int(4), BigInt(1));
  CHECK_EQ(rows[7].coeff_int(1), BigInt(35));
  CHECK(rows[3].coeff(0).is_zero());  // odd rows have no constant term
}

TEST_CASE("determinants exact vs cofactor") {
  std::mt19937 rng(4242);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      Matrix m(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          m.at(r, c) = BiPoly(random_poly(rng, 't', 2));
      CHECK(det_exact(m) == det_cofactor(m));
    }
  }
  Matrix id3 = Matrix::identity(3);
  CHECK(det_exact(id3) == BiPoly(1));
  CHECK(id3.pow(5).at(1, 1) == BiPoly(1));
}

TEST_CASE("linear solving over exact fields") {
  // x + y = 3, x - y = 1
  std::vector<std::vector<Rational>> a = {{1, 1}, {1, -1}};
  std::vector<Rational> rhs = {3, 1};
  auto sol = solve_linear_field<Rational>(a, rhs);
  REQUIRE(sol.status == SolveStatus::kOk);
  CHECK_EQ(sol.x[0], Rational(2));
  CHECK_EQ(sol.x[1], Rational(1));

  std::vector<std::vector<Rational>> under = {{1, 1}};
  auto u = solve_linear_field<Rational>(under, {Rational(1)});
  CHECK(u.status == SolveStatus::kUnderdetermined);

  std::vector<std::vector<Rational>> incon = {{1, 1}, {2, 2}};
  auto n = solve_linear_field<Rational>(incon, {Rational(1), Rational(3)});
  CHECK(n.status == SolveStatus::kNoSolution);
}

TEST_CASE("fracpoly field") {
  const Poly t = Poly::variable('t');
  const FracPoly half(Poly(1), t + Poly(1));
  const FracPoly rest(t, t + Poly(1));
  CHECK(half + rest == FracPoly(Poly(1)));
  CHECK((half * rest) / rest == half);
  CHECK((half - half).is_zero());
  CHECK(field_is_zero(FracPoly()));
  CHECK_FALSE(field_is_zero(half));
  CHECK(field_is_zero(Rational(0)));
}
