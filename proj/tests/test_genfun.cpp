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
#include <vector>

#include <doctest.h>

#include "stripcomb/formulas.hpp"
#include "stripcomb/genfun.hpp"
#include "stripcomb/paths.hpp"

using namespace stripcomb;

namespace {

BiPoly bp(std::initializer_list<Poly> cs) {
  return BiPoly(std::vector<Poly>(cs), 'x');
}

void expect_green(const CheckReport& rep) {
  INFO(rep.id << ": " << rep.witness);
  CHECK(rep.status == CheckStatus::kVerifiedUpTo);
}

}  // namespace

TEST_CASE("count generating functions") {
  CHECK_EQ(gf_numbers(3).label, "eq1.18");
  CHECK_EQ(gf_numbers(4).label, "eq1.19");
  CHECK(gf_numbers(3).gf.equivalent(
      RatFunc(BiPoly(1), bp({Poly(1), Poly(-1), Poly(-1)}))));
  CHECK(gf_numbers(4).gf.equivalent(
      RatFunc(bp({Poly(1), Poly(1), Poly(-1)}),
              bp({Poly(1), Poly(0), Poly(-3)}))));
  for (int k = 0; k <= 8; ++k) {
    const auto coeffs = series_numbers(gf_numbers(k).gf, 20);
    for (int n = 0; n <= 20; ++n)
      CHECK_EQ(coeffs[static_cast<size_t>(n)], a_count(n, k));
  }
  expect_green(gf_numbers_series_check(6, 30));
}

TEST_CASE("weighted generating functions") {
  const Poly t = Poly::variable('t');
  CHECK_EQ(gf_weighted(3).label, "eq2.8");
  CHECK_EQ(gf_weighted(2).label, "eq2.10");
  CHECK(gf_weighted(2).gf.equivalent(RatFunc(
      bp({Poly(1), Poly(1)}),
      bp({Poly(1), Poly(0), -Poly::from_ints({1, 1}, 't')}))));
  CHECK(gf_weighted(3).gf.equivalent(
      RatFunc(BiPoly(1), bp({Poly(1), Poly(-1), -t}))));
  CHECK(gf_weighted(4).gf.equivalent(RatFunc(
      bp({Poly(1), Poly(1), -t}),
      bp({Poly(1), Poly(0), Poly::from_ints({-1, -2}, 't'), Poly(0),
          Poly::from_ints({0, -1, 1}, 't')}))));
  for (int k = 1; k <= 5; ++k) {
    const auto coeffs = series_expand(gf_weighted(k).gf, 14);
    for (long n = 0; n <= 14; ++n)
      CHECK(coeffs[static_cast<size_t>(n)] == a_poly(n, k));
  }
  expect_green(gf_weighted_series_check(6, 30));
  expect_green(theorem_lowterms_check(6));
  expect_green(stability_check(6));
  expect_green(decomposition_check(6));
}

TEST_CASE("corridor generating function") {
  CHECK_EQ(gf_corridor_t(2).label, "corridor");
  for (int k = 0; k <= 4; ++k) {
    const auto coeffs = series_expand(gf_corridor_t(k).gf, 16);
    const auto table = corridor_table_t(16, k);
    for (int n = 0; n <= 16; ++n)
      CHECK(coeffs[static_cast<size_t>(n)] ==
            table[static_cast<size_t>(n)][0]);
  }
  expect_green(gf_corridor_check(5, 24));
}

TEST_CASE("marker generating functions") {
  CHECK_EQ(gf_z(3, ZGfKind::kConj4).label, "eq3.2");
  CHECK_EQ(gf_z(3, ZGfKind::kConj5).label, "eq3.7");
  CHECK_EQ(gf_z(4, ZGfKind::kConj5).label, "eq3.8");
  CHECK_EQ(gf_z(2, ZGfKind::kProp5).label, "eq3.10");
  CHECK_EQ(gf_z(4, ZGfKind::kProp5Z1Even).label, "eq3.11");
  CHECK_EQ(gf_z(3, ZGfKind::kProp5Z1Odd).label, "eq3.12");
  CHECK_THROWS_AS(gf_z(0, ZGfKind::kConj4), MathError);
  CHECK_THROWS_AS(gf_z(3, ZGfKind::kProp5Z1Even), MathError);
  CHECK_THROWS_AS(gf_z(4, ZGfKind::kProp5Z1Odd), MathError);
  // The marker expansion reproduces the refined polynomials directly.
  for (int k = 1; k <= 4; ++k) {
    const auto rows = zseries_expand(gf_z(k, ZGfKind::kConj4).gf, 10);
    for (long n = 0; n <= 10; ++n)
      CHECK(rows[static_cast<size_t>(n)] == a_poly_z(n, k));
  }
  expect_green(gf_z_series_check(4, 16));
}

TEST_CASE("continued fractions") {
  CHECK_EQ(continued_fraction_gf(3, CFKind::kDyck).label, "eq1.11");
  CHECK_EQ(continued_fraction_gf(2, CFKind::kOddStrip).label, "eq1.28");
  for (int depth = 1; depth <= 5; ++depth) {
    const auto coeffs =
        series_numbers(continued_fraction_gf(depth, CFKind::kDyck).gf, 16);
    for (int n = 0; n <= 16; ++n) {
      if (n % 2 == 1)
        CHECK_EQ(coeffs[static_cast<size_t>(n)], BigInt(0));
      else
        CHECK_EQ(coeffs[static_cast<size_t>(n)], bounded_dyck(n, depth));
    }
  }
  for (int depth = 0; depth <= 4; ++depth)
    CHECK(continued_fraction_gf(depth, CFKind::kOddStrip)
              .gf.equivalent(gf_numbers(2 * depth + 1).gf));
  expect_green(cf_check(CFKind::kDyck, 7));
  expect_green(cf_check(CFKind::kOddStrip, 5));
}

TEST_CASE("hankel characteristic polynomials") {
  // Constant sequence, fibonacci front, and one irregular-start case.
  CHECK(hankel_char_poly({BigInt(1), BigInt(1)}, 1) ==
        Poly::from_ints({1, -1}, 'x'));
  CHECK(hankel_char_poly({BigInt(1), BigInt(1), BigInt(2), BigInt(3)}, 2) ==
        Poly::from_ints({1, -1, -1}, 'x'));
  CHECK(hankel_char_poly({BigInt(1), BigInt(1), BigInt(2), BigInt(3),
                          BigInt(6), BigInt(9)},
                         3) == Poly::from_ints({1, 0, -3}, 'x'));
  const Poly neg_x2 = Poly::monomial(BigInt(-1), 2, 'x');
  for (int k = 1; k <= 5; ++k) {
    // Unrestricted central binomials, order k+1 window.
    std::vector<BigInt> central;
    for (long n = 0; n < 2 * (k + 1); ++n) central.push_back(binom(n, n / 2));
    const Poly got = hankel_char_poly(central, k + 1);
    const Poly want = fib_at(k + 2, Poly(1), neg_x2) -
                      Poly::variable('x') * fib_at(k + 1, Poly(1), neg_x2);
    CHECK(got == want);
    // Even-strip counts, same window size.
    std::vector<BigInt> strip;
    for (long n = 0; n < 2 * (k + 1); ++n) strip.push_back(a_count(n, 2 * k));
    CHECK(hankel_char_poly(strip, k + 1) ==
          lucas_at(k + 1, Poly(1), neg_x2));
  }
  CHECK_THROWS_AS(
      hankel_char_poly({BigInt(1), BigInt(1), BigInt(1), BigInt(1)}, 2),
      MathError);
}

TEST_CASE("shift-operator annihilators") {
  for (int k = 1; k <= 6; ++k) expect_green(annihilate_check(k));
}

TEST_CASE("coefficient-slice extraction") {
  // First slice is geometric.
  for (int k = 0; k <= 6; ++k) {
    const auto v1 = extract_vj(1, k, k + 6);
    REQUIRE(v1.has_value());
    CHECK(*v1 == Poly(std::vector<BigInt>(static_cast<size_t>(k) + 1,
                                          BigInt(1)),
                      'x'));
  }
  // Second slice closed form, frozen at two widths.
  const auto v23 = extract_vj(2, 3, 2 * 3 + 10);
  REQUIRE(v23.has_value());
  CHECK(*v23 == Poly::from_ints({1, 2, 4, 5, 2, 1, 1}, 'x'));
  const auto v24 = extract_vj(2, 4, 2 * 4 + 10);
  REQUIRE(v24.has_value());
  CHECK(*v24 == Poly::from_ints({1, 2, 4, 5, 7, 2, 2, 1, 1}, 'x'));
  // Frozen k = 2 column for the first five slices.
  const std::vector<std::vector<long>> rows = {
      {1, 1, 1},
      {1, 2, 4, 1, 1},
      {1, 3, 9, 5, 7, 1, 1},
      {1, 4, 16, 14, 26, 8, 10, 1, 1},
      {1, 5, 25, 30, 70, 34, 52, 11, 13, 1, 1}};
  for (int j = 1; j <= 5; ++j) {
    const auto v = extract_vj(j, 2, 6 * j + 2);
    REQUIRE(v.has_value());
    const auto& want = rows[static_cast<size_t>(j - 1)];
    REQUIRE_EQ(v->degree(), static_cast<int>(want.size()) - 1);
    for (size_t i = 0; i < want.size(); ++i)
      CHECK_EQ(v->coeff(static_cast<int>(i)), BigInt(want[i]));
  }
  CHECK_THROWS_AS(extract_vj(2, 3, 5), MathError);
  expect_green(vj_property_check(3, 4));
}

TEST_CASE("marker-column pipeline") {
  expect_green(vj_z_pipeline(1, 4, 4));
  expect_green(vj_z_pipeline(2, 8, 8));
  expect_green(vj_z_pipeline(3, 14, 14));
  for (int j = 1; j <= 4; ++j) expect_green(eulerian_reduction_check(j));
  const CheckReport u = u_table_report();
  CHECK(u.status == CheckStatus::kSkipped);
  CHECK(u.witness.find("shifted reading matches 6/6") != std::string::npos);
  CHECK(u.witness.find("literal reading matches 0/6") != std::string::npos);
}

TEST_CASE("sequence guessing") {
  std::vector<Rational> fib;
  BigInt a = 1, b = 1;
  for (int i = 0; i < 14; ++i) {
    fib.emplace_back(a);
    const BigInt c = a + b;
    a = b;
    b = c;
  }
  const auto fit = guess_cfinite<Rational>(fib, 5);
  REQUIRE(fit.has_value());
  CHECK_EQ(fit->order, 2);
  CHECK_EQ(fit->offset, 0);
  CHECK(fit->rec[0] == Rational(1));
  CHECK(fit->rec[1] == Rational(1));
  CHECK(fit_char_poly(*fit) == Poly::from_ints({1, -1, -1}, 'x'));
  // Catalan numbers are not C-finite; no small order fits.
  std::vector<Rational> cat;
  for (long n = 0; n < 16; ++n) cat.emplace_back(catalan(n));
  CHECK_FALSE(guess_cfinite<Rational>(cat, 4).has_value());
  expect_green(guess_denominator_check(5));
}

TEST_CASE("marker collapse audit") {
  const auto reports = marker_collapse_audit(12, 5);
  REQUIRE_EQ(reports.size(), 3);
  CHECK_EQ(reports[0].id, "eq3.13.printed");
  CHECK(reports[0].status == CheckStatus::kVerifiedUpTo);
  CHECK_EQ(reports[1].id, "eq3.13.same_strip");
  CHECK(reports[1].status == CheckStatus::kCounterexample);
  CHECK_EQ(reports[2].id, "eq3.13.kplus2");
  CHECK(reports[2].status == CheckStatus::kCounterexample);
  for (const auto& r : reports) {
    CHECK_FALSE(r.grid.empty());
    if (r.status == CheckStatus::kCounterexample)
      CHECK_FALSE(r.witness.empty());
  }
}
