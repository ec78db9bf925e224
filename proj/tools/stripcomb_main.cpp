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

// Command-line front-end: tables, series, verification suites, recurrence
// guessing, and OEIS cross-checks. Exit codes: 0 ok, 1 verification
// failure, 2 usage error.

#include <atomic>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stripcomb/classic.hpp"
#include "stripcomb/formulas.hpp"
#include "stripcomb/genfun.hpp"
#include "stripcomb/oeis.hpp"
#include "stripcomb/qseries.hpp"
#include "stripcomb/report.hpp"
#include "stripcomb/series.hpp"

namespace sc = stripcomb;
using nlohmann::json;

namespace {

// JSON numbers above 53 bits would lose precision; emit those as strings.
json json_int(const sc::BigInt& v) {
  static const sc::BigInt lim("9007199254740992");
  if (v <= lim && v >= -lim) return json(sc::to_long_checked(v));
  return json(sc::bigint_str(v));
}

json json_poly(const sc::Poly& p) {
  json coeffs = json::array();
  for (const sc::BigInt& c : p.coeffs()) coeffs.push_back(json_int(c));
  return json{{"var", std::string(1, p.var() ? p.var() : 'x')},
              {"coeffs", coeffs}};
}

std::string format_params(const std::map<std::string, long>& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : p) {
    if (!first) out << ", ";
    out << k << "=" << v;
    first = false;
  }
  return out.str();
}

struct VerifyFlags {
  std::optional<long> nmax, jmax, kmax;
  int order = 40;
  int jobs = 1;

  bool filtered() const { return nmax || jmax || kmax; }
  bool admits(const std::map<std::string, long>& inst) const {
    auto within = [&](const char* key, const std::optional<long>& cap) {
      if (!cap) return true;
      auto it = inst.find(key);
      return it == inst.end() || it->second <= *cap;
    };
    return within("n", nmax) && within("j", jmax) && within("k", kmax);
  }
  std::string describe() const {
    std::ostringstream out;
    if (nmax) out << " n<=" << *nmax;
    if (jmax) out << " j<=" << *jmax;
    if (kmax) out << " k<=" << *kmax;
    return out.str();
  }
};

// One registered identity under the grid filters. Without filters the
// library runs its full declared grid in one call.
sc::CheckReport run_registry_id(const std::string& id, bool q_suite,
                                const VerifyFlags& flags) {
  auto check = [&](const std::string& i, const std::map<std::string, long>& p) {
    return q_suite ? sc::q_identity_check(i, p) : sc::identity_check(i, p);
  };
  if (!flags.filtered())
    return q_suite ? sc::q_identity_check(id) : sc::identity_check(id);

  const auto grid =
      q_suite ? sc::q_identity_grid(id) : sc::identity_grid(id);
  sc::CheckReport agg;
  agg.id = id;
  agg.status = sc::CheckStatus::kVerifiedUpTo;
  size_t cells = 0;
  double wall = 0.0;
  for (const auto& inst : grid) {
    if (!flags.admits(inst)) continue;
    ++cells;
    sc::CheckReport rep = check(id, inst);
    wall += rep.wall_ms;
    if (rep.status == sc::CheckStatus::kCounterexample) {
      agg.status = rep.status;
      agg.witness = format_params(inst) + ": " + rep.witness;
      break;
    }
  }
  agg.grid = "declared grid filtered to" + flags.describe() + " (" +
             std::to_string(cells) + " cells)";
  agg.checked_upto = agg.grid;
  agg.wall_ms = wall;
  return agg;
}

std::vector<std::function<sc::CheckReport()>> conjecture_cells(
    const VerifyFlags& flags) {
  const int K = static_cast<int>(flags.kmax.value_or(4));
  const int J = static_cast<int>(flags.jmax.value_or(3));
  const int order = flags.order;
  std::vector<std::function<sc::CheckReport()>> cells;
  cells.push_back([=] { return sc::gf_numbers_series_check(K, order); });
  cells.push_back([=] { return sc::gf_weighted_series_check(K, order); });
  cells.push_back([=] { return sc::gf_corridor_check(K, 24); });
  cells.push_back([=] { return sc::gf_z_series_check(std::min(K, 5), 24); });
  cells.push_back([=] { return sc::theorem_lowterms_check(K); });
  cells.push_back([=] { return sc::stability_check(K); });
  cells.push_back([=] { return sc::decomposition_check(K); });
  cells.push_back([=] { return sc::cf_check(sc::CFKind::kDyck, K + 2); });
  cells.push_back([=] { return sc::cf_check(sc::CFKind::kOddStrip, K + 2); });
  cells.push_back([=] {
    sc::CheckReport agg;
    for (int k = 1; k <= K; ++k) {
      agg = sc::annihilate_check(k);
      if (agg.status == sc::CheckStatus::kCounterexample) return agg;
    }
    agg.grid = "1 <= k <= " + std::to_string(K) + ", n <= 30";
    agg.checked_upto = agg.grid;
    return agg;
  });
  cells.push_back([=] { return sc::vj_property_check(J, K); });
  for (int j = 1; j <= std::min(J, 3); ++j) {
    // z-truncation wide enough for the full denominator plus tail window
    const int zt = (j - 1) * (j + 2) / 2 + j + 4;
    cells.push_back([=] { return sc::vj_z_pipeline(j, zt, zt); });
  }
  cells.push_back([=] {
    sc::CheckReport agg;
    const int top = std::min(J + 2, 5);
    for (int j = 1; j <= top; ++j) {
      agg = sc::eulerian_reduction_check(j);
      if (agg.status == sc::CheckStatus::kCounterexample) return agg;
    }
    agg.grid = "1 <= j <= " + std::to_string(top);
    agg.checked_upto = agg.grid;
    return agg;
  });
  cells.push_back([] { return sc::u_table_report(); });
  cells.push_back([=] { return sc::guess_denominator_check(K); });
  return cells;
}

// Runs cells under --jobs threads; result order stays the cell order.
std::vector<sc::CheckReport> run_cells(
    const std::vector<std::function<sc::CheckReport()>>& cells, int jobs) {
  std::vector<sc::CheckReport> out(cells.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < cells.size(); ++i) out[i] = cells[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      out[i] = cells[i]();
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(jobs, static_cast<int>(cells.size()));
  pool.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

int finish_verify(const std::vector<sc::CheckReport>& reports,
                  const std::string& format, const std::string& report_path) {
  bool failed = false;
  for (const sc::CheckReport& r : reports)
    failed = failed || r.status == sc::CheckStatus::kCounterexample;
  if (format == "json") {
    std::cout << sc::reports_json(reports) << "\n";
  } else {
    for (const sc::CheckReport& r : reports)
      std::cout << sc::report_line(r) << "\n";
    std::cout << (failed ? "FAILED" : "OK") << " (" << reports.size()
              << " checks)\n";
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::trunc);
    out << sc::reports_json(reports) << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return 2;
    }
  }
  return failed ? 1 : 0;
}

std::vector<sc::Rational> parse_seq(const std::string& text) {
  std::vector<sc::Rational> seq;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const size_t a = token.find_first_not_of(" \t");
    if (a == std::string::npos)
      throw sc::MathError("guess: empty term in --seq");
    const size_t b = token.find_last_not_of(" \t");
    seq.emplace_back(sc::BigInt(token.substr(a, b - a + 1)));
  }
  if (seq.empty()) throw sc::MathError("guess: --seq has no terms");
  return seq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of lattice paths in bounded strips"};
  app.require_subcommand(1);

  // count
  auto* cmd_count = app.add_subcommand("count", "strip path count");
  long count_n = 0, count_k = 0;
  std::string count_format = "text";
  cmd_count->add_option("--n", count_n, "path length")->required();
  cmd_count->add_option("--k", count_k, "strip width")->required();
  cmd_count->add_option("--format", count_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // poly
  auto* cmd_poly = app.add_subcommand("poly", "weight polynomial in t");
  long poly_n = 0, poly_k = 0;
  std::optional<long> poly_t, poly_z;
  std::string poly_format = "text";
  cmd_poly->add_option("--n", poly_n, "path length")->required();
  cmd_poly->add_option("--k", poly_k, "strip width (>= 1)")->required();
  cmd_poly->add_option("--t", poly_t, "evaluate at integer t");
  cmd_poly->add_option("--z", poly_z, "z-grading, z in {-1, 1}");
  cmd_poly->add_option("--format", poly_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // series
  auto* cmd_series =
      app.add_subcommand("series", "expand a generating function");
  std::string series_gf = "weighted";
  long series_strip = 3;
  int series_order = 40;
  std::optional<long> series_t;
  std::string series_format = "text";
  cmd_series->add_option("--gf", series_gf, "numbers|weighted|corridor")
      ->check(CLI::IsMember({"numbers", "weighted", "corridor"}));
  cmd_series->add_option("--strip", series_strip, "strip width")->required();
  cmd_series->add_option("--order", series_order, "truncation order");
  cmd_series->add_option("--t", series_t, "evaluate rows at integer t");
  cmd_series->add_option("--format", series_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  VerifyFlags vflags;
  std::string verify_format = "text";
  std::string report_path;
  cmd_verify
      ->add_option("--suite", suite, "classic|identities|q|conjectures|all")
      ->check(CLI::IsMember({"classic", "identities", "q", "conjectures",
                             "all"}));
  cmd_verify->add_option("--nmax", vflags.nmax, "cap n in registry grids");
  cmd_verify->add_option("--jmax", vflags.jmax,
                         "cap j (conjecture grid, default 3)");
  cmd_verify->add_option("--kmax", vflags.kmax,
                         "cap k (conjecture grid, default 4)");
  cmd_verify->add_option("--order", vflags.order,
                         "series order for gf checks");
  cmd_verify->add_option("--jobs", vflags.jobs, "parallel cells");
  cmd_verify->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_verify->add_option("--report", report_path,
                         "also write the JSON report array to this file");

  // guess
  auto* cmd_guess =
      app.add_subcommand("guess", "fit a linear recurrence with constant "
                                  "coefficients");
  std::optional<long> guess_strip;
  std::optional<int> guess_terms, guess_maxorder;
  std::string guess_seq, guess_format = "text";
  cmd_guess->add_option("--strip", guess_strip,
                        "guess from strip counts of this width");
  cmd_guess->add_option("--seq", guess_seq, "comma-separated integer terms");
  cmd_guess->add_option("--terms", guess_terms, "how many terms to generate");
  cmd_guess->add_option("--max-order", guess_maxorder, "search bound");
  cmd_guess->add_option("--format", guess_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // oeis
  auto* cmd_oeis = app.add_subcommand("oeis", "cross-check OEIS sequences");
  std::string oeis_id;
  sc::OeisOptions oeis_opts;
  cmd_oeis->add_option("--id", oeis_id, "A-number (default: all bundled)");
  cmd_oeis->add_option("--len", oeis_opts.prefix_len, "prefix length");
  cmd_oeis->add_flag("--online", oeis_opts.online,
                     "fetch and cross-check the b-file (cached)");
  cmd_oeis->add_option("--cache-dir", oeis_opts.cache_dir,
                       "b-file cache directory (or $STRIPCOMB_CACHE)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_count->parsed()) {
      const sc::BigInt c = sc::a_count(count_n, count_k);
      if (count_format == "json")
        std::cout << json{{"n", count_n}, {"k", count_k},
                          {"count", json_int(c)}}
                         .dump()
                  << "\n";
      else if (count_format == "csv")
        std::cout << "n,k,count\n"
                  << count_n << "," << count_k << "," << sc::bigint_str(c)
                  << "\n";
      else
        std::cout << sc::bigint_str(c) << "\n";
      return 0;
    }

    if (cmd_poly->parsed()) {
      if (poly_z && *poly_z != 1 && *poly_z != -1)
        throw sc::MathError("poly: --z must be 1 or -1");
      sc::Poly p = poly_z ? sc::a_poly_z(poly_n, poly_k)
                                .eval_pm1(static_cast<int>(*poly_z))
                          : sc::a_poly(poly_n, poly_k);
      if (poly_t) {
        const sc::BigInt v = p.eval(sc::BigInt(*poly_t));
        std::cout << (poly_format == "json" ? json_int(v).dump()
                                            : sc::bigint_str(v))
                  << "\n";
        return 0;
      }
      if (poly_format == "json")
        std::cout << json_poly(p).dump() << "\n";
      else if (poly_format == "csv") {
        std::cout << "power,coeff\n";
        for (int i = 0; i <= p.degree(); ++i)
          std::cout << i << "," << sc::bigint_str(p.coeff(i)) << "\n";
      } else {
        std::cout << p.str() << "\n";
      }
      return 0;
    }

    if (cmd_series->parsed()) {
      sc::NamedGF ngf = [&] {
        if (series_gf == "numbers")
          return sc::gf_numbers(static_cast<int>(series_strip));
        if (series_gf == "weighted")
          return sc::gf_weighted(static_cast<int>(series_strip));
        if (series_strip % 2 == 0)
          throw sc::MathError("series: corridor gf needs an odd strip");
        return sc::gf_corridor_t(static_cast<int>((series_strip - 1) / 2));
      }();
      std::vector<sc::Poly> rows = sc::series_expand(ngf.gf, series_order);
      json jrows = json::array();
      for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
        const sc::Poly& row = rows[static_cast<size_t>(n)];
        if (series_t) {
          const sc::BigInt v = row.eval(sc::BigInt(*series_t));
          if (series_format == "json")
            jrows.push_back(json{{"n", n}, {"value", json_int(v)}});
          else if (series_format == "csv")
            std::cout << n << "," << sc::bigint_str(v) << "\n";
          else
            std::cout << sc::bigint_str(v) << "\n";
        } else {
          if (series_format == "json")
            jrows.push_back(json{{"n", n}, {"poly", json_poly(row)}});
          else if (series_format == "csv")
            std::cout << n << "," << row.str_compact() << "\n";
          else
            std::cout << row.str() << "\n";
        }
      }
      if (series_format == "json")
        std::cout << json{{"gf", ngf.label}, {"strip", series_strip},
                          {"rows", jrows}}
                         .dump()
                  << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::function<sc::CheckReport()>> cells;
      const bool classic =
          suite == "classic" || suite == "identities" || suite == "all";
      const bool q = suite == "q" || suite == "all";
      const bool conj = suite == "conjectures" || suite == "all";
      if (classic)
        for (const std::string& id : sc::identity_ids())
          cells.push_back([id, vflags] {
            return run_registry_id(id, false, vflags);
          });
      if (q)
        for (const std::string& id : sc::q_identity_ids())
          cells.push_back([id, vflags] {
            return run_registry_id(id, true, vflags);
          });
      if (conj)
        for (auto& cell : conjecture_cells(vflags)) cells.push_back(cell);
      return finish_verify(run_cells(cells, vflags.jobs), verify_format,
                           report_path);
    }

    if (cmd_guess->parsed()) {
      std::vector<sc::Rational> seq;
      int max_order = guess_maxorder.value_or(8);
      if (!guess_seq.empty()) {
        seq = parse_seq(guess_seq);
      } else if (guess_strip) {
        const long h = *guess_strip / 2;
        const int terms = guess_terms.value_or(static_cast<int>(3 * h) + 10);
        for (int n = 0; n < terms; ++n)
          seq.emplace_back(sc::a_count(n, *guess_strip));
        if (!guess_maxorder) max_order = static_cast<int>(h) + 2;
      } else {
        throw sc::MathError("guess: need --strip or --seq");
      }
      auto fit = sc::guess_cfinite(seq, max_order, 0);
      if (!fit) fit = sc::guess_cfinite(seq, max_order, 1);
      if (!fit) {
        std::cerr << "no recurrence of order <= " << max_order << " found\n";
        return 1;
      }
      const sc::Poly den = sc::fit_char_poly(*fit);
      // rec[i] multiplies seq[n+i]; reverse so entry i goes with a(n-1-i).
      std::vector<std::string> newest_first;
      for (int i = fit->order - 1; i >= 0; --i)
        newest_first.push_back(fit->rec[static_cast<size_t>(i)].get_str());
      if (guess_format == "json") {
        std::cout << json{{"order", fit->order},
                          {"offset", fit->offset},
                          {"coeffs", newest_first},
                          {"denominator", den.str_compact()}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "order " << fit->order << ", valid from n = "
                  << fit->offset << "\n";
        std::ostringstream rhs;
        for (int i = 0; i < fit->order; ++i) {
          if (i) rhs << " + ";
          rhs << newest_first[static_cast<size_t>(i)] << "*a(n-" << (i + 1)
              << ")";
        }
        std::cout << "a(n) = " << rhs.str() << "\n";
        std::cout << "denominator: " << den.str() << "\n";
      }
      return 0;
    }

    if (cmd_oeis->parsed()) {
      std::vector<std::string> ids =
          oeis_id.empty() ? sc::oeis_ids() : std::vector<std::string>{oeis_id};
      bool failed = false;
      for (const std::string& id : ids) {
        const sc::CheckReport rep = sc::oeis_check(id, oeis_opts);
        std::cout << sc::report_line(rep) << "\n";
        failed = failed || rep.status == sc::CheckStatus::kCounterexample;
      }
      return failed ? 1 : 0;
    }
  } catch (const sc::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
