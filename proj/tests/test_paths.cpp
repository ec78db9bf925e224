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
#include "stripcomb/paths.hpp"

using namespace stripcomb;

TEST_CASE("strip window") {
  CHECK_EQ(StripSpec{1}.lower(), -1);
  CHECK_EQ(StripSpec{1}.upper(), 0);
  CHECK_EQ(StripSpec{4}.lower(), -2);
  CHECK_EQ(StripSpec{4}.upper(), 2);
  CHECK_EQ(StripSpec{5}.lower(), -3);
  CHECK_EQ(StripSpec{5}.upper(), 2);
}

TEST_CASE("path heights and extremal statistics") {
  const LatticePath p{"UDUD"};
  const auto h = p.heights();
  REQUIRE_EQ(h.size(), 5);
  CHECK_EQ(h[0], 0);
  CHECK_EQ(h[1], 1);
  CHECK_EQ(h[4], 0);
  const PathWeight w = path_weight(p);
  CHECK_EQ(w.e, 2);     // peaks at x = 1 and x = 3
  CHECK_EQ(w.iota, 4);  // 1 + 3
  // A valley at height -1 is not extremal; at height -2 it is.
  CHECK_EQ(path_weight(LatticePath{"DU"}).e, 0);
  CHECK_EQ(path_weight(LatticePath{"DDUU"}).e, 1);
  CHECK_EQ(path_weight(LatticePath{"DDUU"}).iota, 2);
  CHECK_EQ(path_weight(LatticePath{""}).e, 0);
}

TEST_CASE("enumeration matches the endpoint rule") {
  // Width 1 admits exactly one path per length (alternating D, U).
  for (int n = 0; n <= 10; ++n)
    CHECK_EQ(enumerate_strip(n, 1).size(), 1);
  const auto paths = enumerate_strip(4, 3);
  CHECK_EQ(paths.size(), 5);  // F_5
  for (const LatticePath& p : paths) {
    const auto h = p.heights();
    CHECK((h.back() == 0 || h.back() == -1));
    for (int y : h) {
      CHECK(y >= StripSpec{3}.lower());
      CHECK(y <= StripSpec{3}.upper());
    }
  }
  // Lexicographic step order with D < U is stable output. "UUDD" is
  // absent: its peak pokes above the width-3 ceiling.
  CHECK_EQ(paths[0].steps, "DDUU");
  CHECK_EQ(paths.back().steps, "UDUD");
}

TEST_CASE("brute-force weights at small sizes") {
  CHECK_EQ(weight_poly_bruteforce(6, 3).str(), "1 + 5*t + 6*t^2 + t^3");
  // t = 1 collapses to plain counts.
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 10; ++n)
      CHECK_EQ(weight_poly_bruteforce(n, k).eval(BigInt(1)),
               BigInt(enumerate_strip(n, k).size()));
  // Width 3 counts are Fibonacci.
  for (int n = 0; n <= 12; ++n)
    CHECK_EQ(BigInt(enumerate_strip(n, 3).size()), fibonacci(n + 1));
}

namespace {

// Independent walk count on the path graph 1..k+1 by naive vector iteration.
BigInt walks_naive(int n, int from, int to, int k) {
  std::vector<BigInt> cur(static_cast<size_t>(k) + 1, BigInt(0));
  cur[static_cast<size_t>(from - 1)] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(cur.size(), BigInt(0));
    for (size_t v = 0; v < cur.size(); ++v) {
      if (v > 0) next[v - 1] += cur[v];
      if (v + 1 < cur.size()) next[v + 1] += cur[v];
    }
    cur = std::move(next);
  }
  return cur[static_cast<size_t>(to - 1)];
}

}  // namespace

TEST_CASE("walk counts on the path graph") {
  // One vertex pair: walks alternate, so counts are 0/1 by parity.
  CHECK_EQ(walk_counts(6, 1)[0], BigInt(1));
  CHECK_EQ(walk_counts(7, 1)[0], BigInt(0));
  CHECK_EQ(walk_counts(7, 1)[1], BigInt(1));
  // Frozen values for 7 and 5 steps to the second vertex of the 4-path.
  CHECK_EQ(walk_counts(7, 3)[1], BigInt(13));
  CHECK_EQ(walk_counts(5, 3)[1], BigInt(5));
  CHECK_EQ(walk_counts(6, 3)[1], BigInt(0));  // parity
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 12; ++n) {
      const auto row = walk_counts(n, k);
      REQUIRE_EQ(row.size(), static_cast<size_t>(k) + 1);
      for (int m = 1; m <= k + 1; ++m)
        CHECK_EQ(row[static_cast<size_t>(m - 1)], walks_naive(n, 1, m, k));
    }
  // Bounded Dyck walks return to 1; Catalan while the bound is slack.
  for (int k = 1; k <= 6; ++k)
    for (int n2 = 0; n2 <= 16; n2 += 2) {
      CHECK_EQ(bounded_dyck(n2, k), walk_counts(n2, k)[0]);
      if (n2 / 2 <= k) CHECK_EQ(bounded_dyck(n2, k), catalan(n2 / 2));
    }
}

TEST_CASE("corridor triangle") {
  const auto tri = corridor_table(6);
  REQUIRE_EQ(tri.size(), 7);
  CHECK_EQ(tri[0][0], BigInt(1));
  CHECK_EQ(tri[5][0], BigInt(10));
  CHECK_EQ(tri[5][1], BigInt(10));
  CHECK_EQ(tri[5][2], BigInt(5));
  // Closed binomial form on the whole triangle.
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j <= n; ++j)
      CHECK_EQ(tri[static_cast<size_t>(n)][static_cast<size_t>(j)],
               binom(n, (n - j) / 2));
  // t = 1 specialization of the weighted triangle.
  const auto wtri = corridor_table_t(6);
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j <= n; ++j)
      CHECK_EQ(wtri[static_cast<size_t>(n)][static_cast<size_t>(j)].eval(
                   BigInt(1)),
               tri[static_cast<size_t>(n)][static_cast<size_t>(j)]);
  // Bounded columns specialize column 0 to odd-strip counts at t = 1.
  for (int b = 1; b <= 3; ++b) {
    const auto bounded = corridor_table_t(10, b);
    for (int n = 0; n <= 10; ++n)
      CHECK_EQ(bounded[static_cast<size_t>(n)][0].eval(BigInt(1)),
               BigInt(enumerate_strip(n, 2 * b + 1).size()));
  }
}

TEST_CASE("up-step prefix weights") {
  // j = 0 imposes nothing.
  for (int n = 0; n <= 10; ++n)
    CHECK(weight_up_prefix(n, 5, 0) == weight_poly_bruteforce(n, 5));
  // Prefix families are nested: more forced up-steps, fewer paths.
  for (int j = 0; j <= 3; ++j) {
    const Poly a = weight_up_prefix(8, 5, j);
    const Poly b = weight_up_prefix(8, 5, j + 1);
    CHECK((a - b).eval(BigInt(1)) >= 0);
  }
  CHECK(weight_up_prefix(4, 3, 5).is_zero());  // cannot force 5 ups in 4 steps
  CHECK_THROWS_AS(weight_up_prefix(4, 4, 0), MathError);
}

TEST_CASE("csv dumps") {
  const auto tri = corridor_table(2);
  const std::string csv = table_csv(tri);
  CHECK(csv.find("n, j, value\n") == 0);
  CHECK(csv.find("2, 0, 2") != std::string::npos);
  const auto wtri = corridor_table_t(2);
  CHECK(table_csv(wtri).find("t") != std::string::npos);
}
