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

// OEIS cross-checks: a registry of sequence generators backed by the
// library, bundled fixtures as the offline ground truth, and an optional
// cached b-file fetch for online verification.

#include "stripcomb/oeis.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#ifdef STRIPCOMB_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

#include "stripcomb/formulas.hpp"
#include "stripcomb/paths.hpp"

namespace stripcomb {

namespace {

namespace fs = std::filesystem;

// a(n, k, 1, 1): all-plus binomial sum over the z-grading.
BigInt unsigned_sum(long n, long k) {
  return a_poly_z(n, k).eval_pm1(1).eval(BigInt(1));
}

// Linearized corridor triangle, computed by the DP rather than the
// closed form so the fixture comparison stays a two-sided check.
BigInt triangle_entry(long index) {
  long n = 0;
  long base = 0;
  while (base + n + 1 <= index) {
    base += n + 1;
    ++n;
  }
  const auto rows = corridor_table(static_cast<int>(n));
  return rows[static_cast<size_t>(n)][static_cast<size_t>(index - base)];
}

const std::map<std::string, std::function<BigInt(long)>>& generators() {
  static const std::map<std::string, std::function<BigInt(long)>> gens = {
      {"A016116", [](long n) { return a_count(n, 2); }},
      // Fibonacci: the width-3 count gives F(n+1), so shift by one.
      {"A000045",
       [](long n) { return n == 0 ? BigInt(0) : a_count(n - 1, 3); }},
      {"A182522", [](long n) { return a_count(n, 4); }},
      {"A028495", [](long n) { return a_count(n, 5); }},
      {"A030436", [](long n) { return a_count(n, 6); }},
      {"A061551", [](long n) { return a_count(n, 7); }},
      {"A178381", [](long n) { return a_count(n, 8); }},
      // Jacobsthal: zero-prefixed unsigned width-1 sum.
      {"A001045",
       [](long n) { return n == 0 ? BigInt(0) : unsigned_sum(n - 1, 1); }},
      {"A011782", [](long n) { return unsigned_sum(n, 2); }},
      {"A099163", [](long n) { return unsigned_sum(n, 3); }},
      {"A005578", [](long n) { return unsigned_sum(n, 4); }},
      {"A061554", triangle_entry},
  };
  return gens;
}

std::string bfile_url_path(const std::string& a_number) {
  return "/" + a_number + "/b" + a_number.substr(1) + ".txt";
}

fs::path resolve_cache_dir(const OeisOptions& opts) {
  if (!opts.cache_dir.empty()) return fs::path(opts.cache_dir);
  if (const char* env = std::getenv("STRIPCOMB_CACHE")) return fs::path(env);
  const char* home = std::getenv("HOME");
  return fs::path(home ? home : ".") / ".cache" / "stripcomb";
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Fetches the b-file, caching it under the resolved directory. Returns
// the body, or an error message prefixed with "!".
std::string fetch_bfile(const std::string& a_number, const OeisOptions& opts) {
  const fs::path dir = resolve_cache_dir(opts);
  const fs::path cached = dir / (a_number + ".b.txt");
  if (auto body = read_file(cached)) return *body;
#ifdef STRIPCOMB_HAVE_OPENSSL
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(10);
  auto res = client.Get(bfile_url_path(a_number));
  if (!res) return "!connection to oeis.org failed";
  if (res->status != 200)
    return "!HTTP status " + std::to_string(res->status);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = cached.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << res->body;
    if (!out) return "!cache write failed";
  }
  fs::rename(tmp, cached, ec);  // atomic publish
  if (ec) return "!cache rename failed";
  return res->body;
#else
  return "!built without TLS support";
#endif
}

// Tries small index shifts in either direction; b-file offsets do not
// always agree with the bundled indexing.
std::optional<int> align_shift(const std::vector<BigInt>& bundled,
                               const std::vector<BigInt>& fetched) {
  for (int s = 0; s <= 2; ++s) {
    for (int sign : {1, -1}) {
      const int shift = sign * s;
      size_t matched = 0;
      bool ok = true;
      for (size_t i = 0; i < bundled.size(); ++i) {
        const long fi = static_cast<long>(i) + shift;
        if (fi < 0 || fi >= static_cast<long>(fetched.size())) continue;
        if (bundled[i] != fetched[static_cast<size_t>(fi)]) {
          ok = false;
          break;
        }
        ++matched;
      }
      if (ok && matched >= std::min<size_t>(10, bundled.size()))
        return shift;
      if (s == 0) break;  // shift 0 has one orientation
    }
  }
  return std::nullopt;
}

}  // namespace

const OeisFixture* find_fixture(const std::string& a_number) {
  for (const OeisFixture& f : bundled_fixtures())
    if (f.a_number == a_number) return &f;
  return nullptr;
}

std::vector<BigInt> fixture_terms(const OeisFixture& f) {
  std::vector<BigInt> out;
  out.reserve(f.terms.size());
  for (const std::string& t : f.terms) out.emplace_back(t);
  return out;
}

std::vector<BigInt> parse_bfile(const std::string& text) {
  std::vector<BigInt> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string index, value;
    if (!(fields >> index >> value)) break;
    try {
      out.emplace_back(value);
    } catch (const std::invalid_argument&) {
      break;
    }
  }
  return out;
}

std::vector<std::string> oeis_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, gen] : generators()) ids.push_back(id);
  return ids;
}

BigInt oeis_generator(const std::string& a_number, long index) {
  auto it = generators().find(a_number);
  if (it == generators().end())
    throw MathError("oeis_generator: no generator for " + a_number);
  if (index < 0) throw MathError("oeis_generator: negative index");
  return it->second(index);
}

CheckReport oeis_check(const std::string& a_number, const OeisOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const OeisFixture* fixture = find_fixture(a_number);
  if (fixture == nullptr)
    throw MathError("oeis_check: no bundled fixture for " + a_number);

  CheckReport rep;
  rep.id = "oeis:" + a_number;
  rep.status = CheckStatus::kVerifiedUpTo;

  const std::vector<BigInt> bundled = fixture_terms(*fixture);
  const size_t len = std::min<size_t>(
      opts.prefix_len > 0 ? static_cast<size_t>(opts.prefix_len) : 0,
      bundled.size());
  rep.grid = "prefix of " + std::to_string(len) + " terms, bundled";

  for (size_t i = 0; i < len; ++i) {
    const BigInt got = oeis_generator(a_number, static_cast<long>(i));
    if (got != bundled[i]) {
      rep.status = CheckStatus::kCounterexample;
      rep.witness = "index " + std::to_string(i) + ": generated " +
                    bigint_str(got) + ", bundled " + bigint_str(bundled[i]);
      break;
    }
  }

  if (opts.online && rep.status == CheckStatus::kVerifiedUpTo) {
    const std::string body = fetch_bfile(a_number, opts);
    if (!body.empty() && body[0] == '!') {
      std::fprintf(stderr, "warning: %s fetch failed (%s); using bundled fixture\n",
                   a_number.c_str(), body.c_str() + 1);
    } else {
      const std::vector<BigInt> fetched = parse_bfile(body);
      const auto shift = align_shift(bundled, fetched);
      if (!shift) {
        rep.status = CheckStatus::kCounterexample;
        size_t i = 0;
        while (i < bundled.size() && i < fetched.size() &&
               bundled[i] == fetched[i])
          ++i;
        rep.witness = "no alignment with fetched b-file; first divergence "
                      "at index " +
                      std::to_string(i);
      } else {
        rep.grid += " + fetched (shift " + std::to_string(*shift) + ")";
      }
    }
  }

  rep.checked_upto = rep.grid;
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace stripcomb
