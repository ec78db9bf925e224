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

#include <optional>
#include <string>
#include <vector>

#include "stripcomb/classic.hpp"
#include "stripcomb/matrix.hpp"
#include "stripcomb/ratfunc.hpp"
#include "stripcomb/series.hpp"

namespace stripcomb {

// Closed-form generating functions for the strip counts and weight
// polynomials; labels are the catalog ids documented in
// docs/identities.md. Everything is exact rational-function arithmetic;
// series checks against the direct formulas live in the *_check runners.

// sum_n a(n,k) x^n for the strip of width index k >= 0. Integer
// coefficients; parity-dispatched Fibonacci/Lucas closed form.
NamedGF gf_numbers(int k);

// sum_n a(n,k,t) x^n over Z[t]; k >= 1.
NamedGF gf_weighted(int k);

// sum_n c(n,0,t,2k+1) x^n for the t-weighted corridor with columns
// capped at k; k >= 0. Numerator and denominator are built by the
// parity-split three-term recurrences.
NamedGF gf_corridor_t(int k);

// Marker-refined generating functions of a(n,k,t,z). The 1/z terms are
// cleared by scaling numerator and denominator by z, so the series
// machinery only ever sees Laurent-polynomial coefficients.
enum class ZGfKind { kConj4, kConj5, kProp5, kProp5Z1Even, kProp5Z1Odd };

struct NamedZGF {
  std::string label;
  ZRatFunc gf;
};

// k is the strip width index. Validity: kConj4 and kConj5 need k >= 1,
// kProp5 any k >= 0, the z=1 forms need k of the matching parity.
NamedZGF gf_z(int k, ZGfKind which);

enum class CFKind { kDyck, kOddStrip };

// Iterated continued fractions. kDyck: generating function (in even
// powers of x) of Dyck paths of height <= depth. kOddStrip: equals
// gf_numbers(2*depth + 1) through a sign-alternating inner series.
NamedGF continued_fraction_gf(int depth, CFKind flavor);

// Reciprocal characteristic polynomial of a C-finite sequence,
// recovered as the bordered-Hankel determinant of seq[0..2m-1] with
// border column x^m, ..., x, 1. The constant term equals the leading
// m x m Hankel minor; a singular minor throws MathError.
Poly hankel_char_poly(const std::vector<BigInt>& seq, int m);

// Shift-operator annihilators of the count sequences at half-index k:
// checks the order-(k+1) operator on the width-2k strip and the
// order-k operator on the width-(2k-1) strip against direct counts,
// and matches their reversals with the gf_numbers denominators.
CheckReport annihilate_check(int k, int n_max = 30);

// t^j-coefficient pipeline: multiplies the t^j slice of the width-(k+2)
// weighted generating function by (1-x)^{j+1} (1+x)^j and returns the
// quotient by x^{2j} when the product terminates as a polynomial within
// the truncation window; nullopt signals a counterexample candidate.
// Requires trunc >= k*j + 2*j + 2*(j+1).
std::optional<Poly> extract_vj(int j, int k, int trunc);

// Degree, positivity, evaluation and closed-form checks of the
// extracted v_j family over 1 <= j <= j_max, 0 <= k <= k_max.
CheckReport vj_property_check(int j_max, int k_max);

// z-direction pipeline for fixed j: recovers p_j(x,z) from the column
// generating function sum_k v_j(x,k) z^k, then checks the stated z/x
// degrees, the frozen small cases, the reciprocal symmetry, the x=1
// Eulerian reduction and the z=1 factorization.
CheckReport vj_z_pipeline(int j, int k_max, int z_trunc);

// x=1 reduction alone, feasible for larger j: p_j(1,z) against the
// Eulerian row j after removing the (1-z) power.
CheckReport eulerian_reduction_check(int j);

// Reports how the quadratic-coefficient table of v_3 lines up with the
// two candidate readings of the u(2k, m) formulas. Diagnostic only:
// the status is always kSkipped and the witness carries both readings.
CheckReport u_table_report();

// Series-vs-direct checks wired as reports.
CheckReport gf_numbers_series_check(int k_max, int order);
CheckReport gf_weighted_series_check(int k_max, int order);
CheckReport gf_corridor_check(int k_max, int n_max);
CheckReport gf_z_series_check(int k_max, int order);
// Low-order t-coefficients and degree bounds of the two theorem
// denominators.
CheckReport theorem_lowterms_check(int k_max);
// a(n,2k+1,t) == a(n,2k+3,t) for n <= 2k+1.
CheckReport stability_check(int k_max);
// Strip gf decomposition a_k = v_k (1 + x a_{k-1}).
CheckReport decomposition_check(int k_max);
// Continued fractions against their closed forms and the path oracles.
CheckReport cf_check(CFKind flavor, int depth_max);
// Characteristic polynomials recovered by guessing divide the
// gf_numbers denominators; runs both strip parities for half-index
// <= k_max from 3k+10 terms.
CheckReport guess_denominator_check(int k_max);
// Three-way audit of the marker collapse identity at t=1: the printed
// form, the same-strip variant and the k+2 variant, each judged
// independently over n <= n_max, k <= k_max.
std::vector<CheckReport> marker_collapse_audit(int n_max, int k_max);

// Smallest-order constant-coefficient recurrence fitting a sequence
// over an exact field (Rational, or FracPoly for t-polynomial input):
//   seq[n + order] == sum_i rec[i] * seq[n + i]  for n >= offset.
// The fit is solved on a leading window and must survive the last four
// held-out terms; nullopt when no order <= max_order works.
template <typename F>
struct CFiniteFit {
  int order = 0;
  int offset = 0;
  std::vector<F> rec;
};

template <typename F>
std::optional<CFiniteFit<F>> guess_cfinite(const std::vector<F>& seq,
                                           int max_order,
                                           int validity_offset = 0) {
  const int n = static_cast<int>(seq.size());
  constexpr int kHoldout = 4;
  for (int d = 1; d <= max_order; ++d) {
    const int rows_total = n - d - validity_offset;
    if (rows_total < d + kHoldout) break;
    const int rows_fit = rows_total - kHoldout;
    std::vector<std::vector<F>> a;
    std::vector<F> rhs;
    a.reserve(static_cast<size_t>(rows_fit));
    for (int r = 0; r < rows_fit; ++r) {
      std::vector<F> row(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i)
        row[static_cast<size_t>(i)] = seq[static_cast<size_t>(
            validity_offset + r + i)];
      a.push_back(std::move(row));
      rhs.push_back(seq[static_cast<size_t>(validity_offset + r + d)]);
    }
    auto sol = solve_linear_field<F>(std::move(a), std::move(rhs));
    if (sol.status != SolveStatus::kOk) continue;
    bool valid = true;
    for (int s = validity_offset; s + d < n && valid; ++s) {
      F acc{};
      for (int i = 0; i < d; ++i)
        acc = acc + sol.x[static_cast<size_t>(i)] *
                        seq[static_cast<size_t>(s + i)];
      if (!field_is_zero(acc - seq[static_cast<size_t>(s + d)]))
        valid = false;
    }
    if (!valid) continue;
    CFiniteFit<F> fit;
    fit.order = d;
    fit.offset = validity_offset;
    fit.rec = std::move(sol.x);
    return fit;
  }
  return std::nullopt;
}

// Primitive integer characteristic polynomial of a rational-coefficient
// fit, in reciprocal (denominator) orientation.
Poly fit_char_poly(const CFiniteFit<Rational>& fit);

}  // namespace stripcomb
