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

#include "stripcomb/oeis.hpp"
#include "stripcomb/report.hpp"

using namespace stripcomb;

TEST_CASE("bundled fixtures") {
  CHECK_EQ(bundled_fixtures().size(), 12);
  CHECK(find_fixture("A000045") != nullptr);
  CHECK(find_fixture("A999999") == nullptr);
  const auto terms = fixture_terms(*find_fixture("A000045"));
  REQUIRE(terms.size() >= 11);
  CHECK_EQ(terms[10], BigInt(55));
  // Every fixture carries enough terms for the default prefix check.
  for (const auto& f : bundled_fixtures()) CHECK(f.terms.size() >= 20);
}

TEST_CASE("generators align with the catalog") {
  CHECK_EQ(oeis_generator("A000045", 10), BigInt(55));
  CHECK_EQ(oeis_generator("A001045", 5), BigInt(11));
  // Triangle rows are serialized in reading order; row 5 runs 10..1.
  CHECK_EQ(oeis_generator("A061554", 15), BigInt(10));
  CHECK_EQ(oeis_generator("A061554", 20), BigInt(1));
  for (const std::string& id : oeis_ids()) {
    OeisOptions opts;
    opts.prefix_len = 40;
    const CheckReport r = oeis_check(id, opts);
    INFO(id << ": " << r.witness);
    CHECK(r.status == CheckStatus::kVerifiedUpTo);
  }
  CHECK_THROWS_AS(oeis_check("A999999"), MathError);
}

TEST_CASE("b-file parsing is lenient") {
  const std::string text = "# comment\n\n0 1\n1 1\n2 2\n3 3\nbad line\n4 99\n";
  const auto vals = parse_bfile(text);
  REQUIRE_EQ(vals.size(), 4);
  CHECK_EQ(vals[3], BigInt(3));
  CHECK(parse_bfile("").empty());
  CHECK(parse_bfile("# only comments\n# here\n").empty());
}

TEST_CASE("report serialization") {
  CheckReport rep;
  rep.id = "demo";
  rep.grid = "n <= 3";
  rep.status = CheckStatus::kVerifiedUpTo;
  rep.checked_upto = "n = 3";
  rep.wall_ms = 1.5;
  const std::string line = report_line(rep);
  CHECK(line.find("demo: VERIFIED_UP_TO (n = 3)") == 0);
  const std::string js = report_json(rep);
  CHECK(js.find("\"id\":\"demo\"") != std::string::npos);
  CHECK(js.find("\"status\":\"VERIFIED_UP_TO\"") != std::string::npos);
  CHECK(js.find("witness") == std::string::npos);  // empty fields are omitted
  const std::string arr = reports_json({rep, rep});
  CHECK(arr.front() == '[');
  CHECK(arr.find("demo") != std::string::npos);
  CHECK_EQ(status_name(CheckStatus::kCounterexample), "COUNTEREXAMPLE");
  CHECK_EQ(status_name(CheckStatus::kSkipped), "SKIPPED");
}
