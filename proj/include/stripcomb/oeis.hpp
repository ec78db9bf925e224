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

#include "stripcomb/numeric.hpp"
#include "stripcomb/report.hpp"

namespace stripcomb {

// One bundled OEIS sequence prefix. Terms are decimal strings so the
// generated table stays readable and is not limited by machine words.
struct OeisFixture {
  std::string a_number;
  std::vector<std::string> terms;
};

// Fixture table generated by scripts/gen_oeis_fixtures.py.
const std::vector<OeisFixture>& bundled_fixtures();

// nullptr when the A-number is not bundled.
const OeisFixture* find_fixture(const std::string& a_number);

std::vector<BigInt> fixture_terms(const OeisFixture& f);

// Lenient b-file reader: "index value" per line, '#' comments and blank
// lines skipped, stops at the first malformed line.
std::vector<BigInt> parse_bfile(const std::string& text);

struct OeisOptions {
  bool online = false;     // fetch the b-file (cached) and cross-check it
  std::string cache_dir;   // empty: $STRIPCOMB_CACHE, else ~/.cache/stripcomb
  int prefix_len = 20;     // how many generated terms to compare
};

// A-numbers with a registered generator (every bundled sequence has one).
std::vector<std::string> oeis_ids();

// Library value for one sequence entry, including any index shift the
// sequence needs relative to the path statistics.
BigInt oeis_generator(const std::string& a_number, long index);

// Compares generated terms against the bundled fixture, and in online
// mode additionally against the fetched b-file (aligned up to a shift of
// two indices in either direction). Network failure falls back to the
// bundled data with a warning on stderr.
CheckReport oeis_check(const std::string& a_number,
                       const OeisOptions& opts = {});

}  // namespace stripcomb
