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

// q-binomials, q-Pochhammer products, the q-differential operator, and a
// registry of exact q-identities. Everything stays in Z[q]; divisions are
// replaced by recurrences or by cross-multiplied comparisons. See
// docs/identities.md for the statements behind the registered ids.

#include "stripcomb/qseries.hpp"

#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <utility>

#include "stripcomb/classic.hpp"

namespace stripcomb {

namespace {

using Params = std::map<std::string, long>;
using QXSeries = std::vector<QPoly>;  // prefix of a power series in x

long get_param(const Params& p, const std::string& key, long fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::string params_str(const Params& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : p) {
    if (!first) out << ", ";
    out << k << "=" << v;
    first = false;
  }
  return out.str();
}

QPoly qpow(long e) {
  if (e < 0) throw MathError("qseries: negative q-exponent");
  return Poly::monomial(BigInt(1), static_cast<int>(e), 'q');
}

// Row cache for the q-Pascal triangle. Growth is guarded; rows are
// returned by value because the vector may relocate under later growth.
struct QBinomCache {
  std::mutex mu;
  std::vector<std::vector<QPoly>> rows;
};

QPoly qbinom_cached(long n, long k) {
  static QBinomCache cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.rows.empty()) cache.rows.push_back({QPoly(1)});
  while (static_cast<long>(cache.rows.size()) <= n) {
    const auto& prev = cache.rows.back();
    const long m = static_cast<long>(cache.rows.size());
    std::vector<QPoly> row(static_cast<size_t>(m) + 1);
    row[0] = QPoly(1);
    row[static_cast<size_t>(m)] = QPoly(1);
    for (long i = 1; i < m; ++i)
      row[static_cast<size_t>(i)] =
          prev[static_cast<size_t>(i - 1)] +
          qpow(i) * prev[static_cast<size_t>(i)];
    cache.rows.push_back(std::move(row));
  }
  return cache.rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// s[m] = qbinom(m+k, k), the expansion of 1/(x;q)_(k+1).
QXSeries inv_qpoch_series(long k, int order) {
  QXSeries s(static_cast<size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) s[static_cast<size_t>(m)] = qbinom(m + k, k);
  return s;
}

// Polynomial times series prefix; valid through the same order.
QXSeries mul_poly_series(const QXPoly& p, const QXSeries& s) {
  QXSeries out(s.size());
  for (int a = 0; a <= p.degree(); ++a) {
    const QPoly& c = p.coeff(a);
    if (c.is_zero()) continue;
    for (size_t i = static_cast<size_t>(a); i < s.size(); ++i)
      out[i] += c * s[i - static_cast<size_t>(a)];
  }
  return out;
}

// D_q^j / [j]! on a series prefix: out[i] = s[i+j] * qbinom(i+j, j).
QXSeries divided_qderiv(const QXSeries& s, long j) {
  if (j == 0) return s;
  if (static_cast<size_t>(j) >= s.size()) return QXSeries{};
  QXSeries out(s.size() - static_cast<size_t>(j));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = s[i + static_cast<size_t>(j)] *
             qbinom(static_cast<long>(i) + j, j);
  return out;
}

QXSeries scale_series(const QPoly& c, QXSeries s) {
  for (QPoly& v : s) v *= c;
  return s;
}

// Every computed coefficient must match, including zeros past the degree.
std::string match_series_poly(const QXSeries& got, const QXPoly& want) {
  for (size_t i = 0; i < got.size(); ++i) {
    if (got[i] != want.coeff(static_cast<int>(i))) {
      std::ostringstream out;
      out << "x^" << i << ": got " << got[i].str_compact() << ", want "
          << want.coeff(static_cast<int>(i)).str_compact();
      return out.str();
    }
  }
  return {};
}

std::string match_series(const QXSeries& a, const QXSeries& b, size_t upto) {
  for (size_t i = 0; i < upto; ++i) {
    const QPoly& l = i < a.size() ? a[i] : QPoly();
    const QPoly& r = i < b.size() ? b[i] : QPoly();
    if (!(l == r)) {
      std::ostringstream out;
      out << "x^" << i << ": lhs " << l.str_compact() << ", rhs "
          << r.str_compact();
      return out.str();
    }
  }
  return {};
}

std::string match_exact(const QXPoly& got, const QXPoly& want) {
  if (got == want) return {};
  return "lhs = " + got.str() + ", rhs = " + want.str();
}

// Closed form of the divided-derivative polynomials: sum over i of
// q^(i(j+i-n)) [j+k-n; k-i] [n; i] x^i. Terms with a vanishing bracket
// are dropped; on the support the q-exponent is nonnegative.
QXPoly b_closed(long n, long j, long k) {
  QXPoly acc;
  for (long i = 0; i <= n; ++i) {
    const QPoly b1 = qbinom(j + k - n, k - i);
    if (b1.is_zero()) continue;
    const QPoly b2 = qbinom(n, i);
    if (b2.is_zero()) continue;
    const long e = i * (j + i - n);
    if (e < 0) throw MathError("b_closed: negative exponent on support");
    acc += QXPoly::monomial(qpow(e) * b1 * b2, static_cast<int>(i), 'x');
  }
  return acc;
}

// The palindromic q-polynomial r_n(x, q), second displayed form:
// even part q^(j(j+1)) [n;j]^2 x^(2j), odd part q^(j^2) [n;j][n;j-1].
QXPoly r_qpoly(long n) {
  QXPoly acc;
  for (long j = 0; j <= n; ++j) {
    const QPoly b = qbinom(n, j);
    acc += QXPoly::monomial(qpow(j * (j + 1)) * b * b,
                            static_cast<int>(2 * j), 'x');
    if (j >= 1)
      acc += QXPoly::monomial(qpow(j * j) * b * qbinom(n, j - 1),
                              static_cast<int>(2 * j - 1), 'x');
  }
  return acc;
}

Poly collapse_q1(const QXPoly& p) {  // specialize q = 1, keep x
  std::vector<BigInt> c(static_cast<size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i)
    c[static_cast<size_t>(i)] = p.coeff(i).eval(1);
  return Poly(std::move(c), 'x');
}

// ---- individual identity checks -------------------------------------------

// Bounded Rogers-Ramanujan polynomials: the fermionic sum equals the
// signed alternating binomial sum.
std::string check_q1_6(const Params& p) {
  const long n = get_param(p, "n", 0);
  QPoly lhs;
  for (long k = 0; 2 * k <= n; ++k) lhs += qpow(k * k) * qbinom(n - k, k);
  QPoly rhs;
  const long bound = n / 5 + 1;
  for (long j = -bound; j <= bound; ++j) {
    const QPoly b = qbinom(n, floor_div(n + 5 * j, 2));
    if (b.is_zero()) continue;
    const QPoly term = qpow(j * (5 * j - 1) / 2) * b;
    rhs += (j % 2 == 0) ? term : -term;
  }
  if (!(lhs == rhs))
    return "lhs = " + lhs.str_compact() + ", rhs = " + rhs.str_compact();
  if (lhs.eval(1) != fibonacci(n + 1))
    return "q=1 value " + bigint_str(lhs.eval(1)) + " is not the " +
           "Fibonacci number " + bigint_str(fibonacci(n + 1));
  return {};
}

// Strip gf q-analogue: the double-binomial series times two Pochhammer
// factors collapses to the palindromic polynomial r_(k-1).
std::string check_q2_46(const Params& p) {
  const long k = get_param(p, "k", 1);
  const int order = 16;
  QXSeries s(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n)
    s[static_cast<size_t>(n)] = qbinom(floor_div(n + 2 * k, 2), k) *
                                qbinom(floor_div(n + 1 + 2 * k, 2), k);
  const QXPoly front = qpoch_general(2, 0, static_cast<int>(k), 1) *
                       qpoch_general(static_cast<int>(2 * k - 1), 1, 1, 2);
  const QXSeries lhs = mul_poly_series(front, s);
  const QXPoly rhs = r_qpoly(k - 1);
  std::string w = match_series_poly(lhs, rhs);
  if (!w.empty()) return w;
  // q -> 1 reproduces the classical collapse to r_(k-1)(x).
  if (collapse_q1(rhs) != r_poly(static_cast<int>(k - 1)))
    return "q=1 right side is not the classical palindromic polynomial";
  return {};
}

// The ambiguous stacked-bracket form of r_n(x,q) against the definitive
// second form, reading the stacks as floor/ceil halves.
std::string check_q2_47(const Params& p) {
  const long n = get_param(p, "n", 0);
  QXPoly first;
  for (long j = 0; j <= 2 * n; ++j) {
    const QPoly term = qpow((j + 1) * (j + 1) / 4) *
                       qbinom(n, (j + 1) / 2) * qbinom(n, j / 2);
    first += QXPoly::monomial(term, static_cast<int>(j), 'x');
  }
  return match_exact(first, r_qpoly(n));
}

// Divided q-derivative of x^n / (x;q)_(k+1), multiplied back by
// (x;q)_(k+j+1), against the closed-form polynomial.
std::string check_q2_48(const Params& p) {
  const long n = get_param(p, "n", 0);
  const long j = get_param(p, "j", 0);
  const long k = get_param(p, "k", 1);
  const int order = static_cast<int>(n + j + k) + 2;
  QXSeries s(static_cast<size_t>(order + j) + 1);
  for (int m = static_cast<int>(n); m <= order + j; ++m)
    s[static_cast<size_t>(m)] = qbinom(m - n + k, k);
  const QXSeries dv = divided_qderiv(s, j);
  const QXSeries lhs =
      mul_poly_series(qpochhammer(1, static_cast<int>(k + j + 1)), dv);
  return match_series_poly(lhs, b_closed(n, j, k));
}

// Three-term recurrence of the closed-form polynomials in n and j.
std::string check_q2_49(const Params& p) {
  const long n = get_param(p, "n", 1);
  const long j = get_param(p, "j", 1);
  const long k = get_param(p, "k", 1);
  const QXPoly x = QXPoly::variable('x');
  const QXPoly rhs =
      QXPoly(qpow(j)) * x * b_closed(n - 1, j, k) +
      (QXPoly(1) - QXPoly(qpow(k + j)) * x) * b_closed(n - 1, j - 1, k);
  return match_exact(b_closed(n, j, k), rhs);
}

// Pochhammer expansion of a monomial, normalized by q^C(n,2) to stay
// polynomial: the exponents become C(n-l, 2).
std::string check_q2_50(const Params& p) {
  const long n = get_param(p, "n", 0);
  QXPoly lhs;
  for (long l = 0; l <= n; ++l) {
    const QPoly c = qpow((n - l) * (n - l - 1) / 2) * qbinom(n, l);
    const QXPoly term = QXPoly(c) * qpochhammer(1, static_cast<int>(l));
    lhs += (l % 2 == 0) ? term : -term;
  }
  const QXPoly rhs =
      QXPoly::monomial(qpow(n * (n - 1) / 2), static_cast<int>(n), 'x');
  return match_exact(lhs, rhs);
}

// Divided q-derivative of (x;q)_l / (x;q)_(k+1): both sides expanded as
// series; the undetermined exponent is j*l (inferred numerically, then
// pinned here).
std::string check_q2_51(const Params& p) {
  const long j = get_param(p, "j", 0);
  const long l = get_param(p, "l", 0);
  const long k = get_param(p, "k", 1);
  const int order = static_cast<int>(j + l + k) + 6;
  const QXSeries base = mul_poly_series(
      qpochhammer(1, static_cast<int>(l)),
      inv_qpoch_series(k, order + static_cast<int>(j)));
  const QXSeries lhs = divided_qderiv(base, j);
  const QXSeries rhs = scale_series(
      qpow(j * l) * qbinom(k + j - l, j),
      mul_poly_series(qpochhammer(1, static_cast<int>(l)),
                      inv_qpoch_series(k + j, order)));
  return match_series(lhs, rhs, static_cast<size_t>(order) + 1);
}

// The alternating Pochhammer expansion behind the closed form; series
// comparison with a global q^M normalization when j < n.
std::string check_q2_52(const Params& p) {
  const long n = get_param(p, "n", 0);
  const long j = get_param(p, "j", 0);
  const long k = get_param(p, "k", 1);
  long min_e = 0;
  for (long l = 0; l <= n; ++l)
    min_e = std::min(min_e, l * (l + 1) / 2 + l * (j - n));
  const long shift = -min_e;
  const int order = static_cast<int>(n + j + k) + 6;
  QXSeries s(static_cast<size_t>(order + j) + 1);
  for (int m = static_cast<int>(n); m <= order + j; ++m)
    s[static_cast<size_t>(m)] = qbinom(m - n + k, k);
  const QXSeries lhs = scale_series(qpow(shift), divided_qderiv(s, j));
  QXPoly acc;
  for (long l = 0; l <= n; ++l) {
    const QPoly b = qbinom(n, l) * qbinom(k + j - l, j);
    if (b.is_zero()) continue;
    const QPoly c = qpow(l * (l + 1) / 2 + l * (j - n) + shift) * b;
    const QXPoly term = QXPoly(c) * qpochhammer(1, static_cast<int>(l));
    acc += (l % 2 == 0) ? term : -term;
  }
  const QXSeries rhs = mul_poly_series(acc, inv_qpoch_series(k + j, order));
  return match_series(lhs, rhs, static_cast<size_t>(order) + 1);
}

// Polynomial identity between the closed form and its alternating
// Pochhammer expansion, normalized by q^M as above.
std::string check_q2_53(const Params& p) {
  const long n = get_param(p, "n", 0);
  const long j = get_param(p, "j", 0);
  const long k = get_param(p, "k", 1);
  long min_e = 0;
  for (long l = 0; l <= n; ++l)
    min_e = std::min(min_e, l * (l + 1) / 2 + l * (j - n));
  const long shift = -min_e;
  const QXPoly lhs = QXPoly(qpow(shift)) * b_closed(n, j, k);
  QXPoly rhs;
  for (long l = 0; l <= n; ++l) {
    const QPoly b = qbinom(n, l) * qbinom(k + j - l, j);
    if (b.is_zero()) continue;
    const QPoly c = qpow(l * (l + 1) / 2 + l * (j - n) + shift) * b;
    const QXPoly term = QXPoly(c) * qpochhammer(1, static_cast<int>(l));
    rhs += (l % 2 == 0) ? term : -term;
  }
  return match_exact(lhs, rhs);
}

// Diagonal special case: squared-bracket polynomial equals the
// alternating expansion with a central bracket.
std::string check_q2_54(const Params& p) {
  const long n = get_param(p, "n", 0);
  QXPoly lhs;
  for (long i = 0; i <= n; ++i) {
    const QPoly b = qbinom(n, i);
    lhs += QXPoly::monomial(qpow(i * i) * b * b, static_cast<int>(i), 'x');
  }
  QXPoly rhs;
  for (long l = 0; l <= n; ++l) {
    const QPoly c =
        qpow(l * (l + 1) / 2) * qbinom(n, l) * qbinom(2 * n - l, n);
    const QXPoly term = QXPoly(c) * qpochhammer(1, static_cast<int>(l));
    rhs += (l % 2 == 0) ? term : -term;
  }
  return match_exact(lhs, rhs);
}

// q-Narayana expansion, cross-multiplied by [k][k+1] to avoid division.
std::string check_q2_55(const Params& p) {
  const long k = get_param(p, "k", 1);
  QXPoly lhs;
  for (long i = 1; i <= k; ++i) {
    const QPoly c = qpow(i * (i - 1)) * qbinom(k, i) * qbinom(k, i - 1);
    lhs += QXPoly::monomial(c, static_cast<int>(i), 'x');
  }
  lhs = QXPoly(qint(k + 1)) * lhs;
  QXPoly rhs;
  for (long l = 0; l <= k; ++l) {
    const QPoly c =
        qpow(l * (l - 1) / 2) * qbinom(k + 1, l) * qbinom(2 * k - l, k);
    const QXPoly term = QXPoly(c) * qpochhammer(1, static_cast<int>(l));
    rhs += (l % 2 == 0) ? term : -term;
  }
  rhs = QXPoly(qint(k)) * rhs;
  return match_exact(lhs, rhs);
}

// ---- registry ---------------------------------------------------------------

struct QIdentityDef {
  std::string grid_desc;
  std::function<std::vector<Params>()> grid;
  std::function<std::string(const Params&)> check;
};

std::vector<Params> grid_n(long lo, long hi) {
  std::vector<Params> g;
  for (long n = lo; n <= hi; ++n) g.push_back({{"n", n}});
  return g;
}

std::vector<Params> grid_k(long lo, long hi) {
  std::vector<Params> g;
  for (long k = lo; k <= hi; ++k) g.push_back({{"k", k}});
  return g;
}

// The closed form only represents the divided derivative while the
// polynomial degree window n <= j+k holds; outside it the bracket
// [j+k-n; k-i] kills every term.
std::vector<Params> grid_njk(long n_lo, long j_lo) {
  std::vector<Params> g;
  for (long k = 1; k <= 6; ++k)
    for (long j = j_lo; j <= 6; ++j)
      for (long n = n_lo; n <= 6 && n <= j + k; ++n)
        g.push_back({{"n", n}, {"j", j}, {"k", k}});
  return g;
}

std::vector<Params> grid_nk_diag() {
  std::vector<Params> g;
  for (long k = 1; k <= 6; ++k)
    for (long n = 0; n <= k; ++n)
      for (long j = 0; j <= 6; ++j)
        g.push_back({{"n", n}, {"j", j}, {"k", k}});
  return g;
}

std::vector<Params> grid_jlk() {
  std::vector<Params> g;
  for (long k = 1; k <= 6; ++k)
    for (long l = 0; l <= k; ++l)
      for (long j = 0; j <= 6; ++j)
        g.push_back({{"j", j}, {"l", l}, {"k", k}});
  return g;
}

const std::map<std::string, QIdentityDef>& registry() {
  static const std::map<std::string, QIdentityDef> defs = {
      {"q:eq1.6", {"0 <= n <= 12", [] { return grid_n(0, 12); }, check_q1_6}},
      {"q:eq2.46",
       {"1 <= k <= 4, x-order 16", [] { return grid_k(1, 4); },
        check_q2_46}},
      {"q:eq2.47",
       {"0 <= n <= 8", [] { return grid_n(0, 8); }, check_q2_47}},
      {"q:eq2.48",
       {"0 <= n <= j+k, j <= 6, 1 <= k <= 6", [] { return grid_njk(0, 0); },
        check_q2_48}},
      {"q:eq2.49",
       {"1 <= n <= j+k, 1 <= j <= 6, 1 <= k <= 6",
        [] { return grid_njk(1, 1); }, check_q2_49}},
      {"q:eq2.50",
       {"0 <= n <= 8", [] { return grid_n(0, 8); }, check_q2_50}},
      {"q:eq2.51",
       {"0 <= j <= 6, 0 <= l <= k <= 6", [] { return grid_jlk(); },
        check_q2_51}},
      {"q:eq2.52",
       {"0 <= n <= k <= 6, 0 <= j <= 6", [] { return grid_nk_diag(); },
        check_q2_52}},
      {"q:eq2.53",
       {"0 <= n <= k <= 6, 0 <= j <= 6", [] { return grid_nk_diag(); },
        check_q2_53}},
      {"q:eq2.54",
       {"0 <= n <= 8", [] { return grid_n(0, 8); }, check_q2_54}},
      {"q:eq2.55",
       {"1 <= k <= 8", [] { return grid_k(1, 8); }, check_q2_55}},
  };
  return defs;
}

}  // namespace

QPoly qint(long n) {
  if (n <= 0) return QPoly();
  return QPoly(std::vector<BigInt>(static_cast<size_t>(n), BigInt(1)), 'q');
}

QPoly qbinom(long n, long k) {
  if (k < 0 || k > n || n < 0) return QPoly();
  return qbinom_cached(n, k);
}

QXPoly qpochhammer(int x_exp, int n) { return qpoch_general(n, 0, 1, x_exp); }

QXPoly qpoch_general(int n, int start, int step, int x_exp) {
  if (n < 0) throw MathError("qpoch_general: n < 0");
  if (x_exp < 1) throw MathError("qpoch_general: x exponent < 1");
  QXPoly acc(1);
  for (int j = 0; j < n; ++j)
    acc *= QXPoly(1) - QXPoly::monomial(qpow(start + static_cast<long>(j) * step),
                                        x_exp, 'x');
  return acc;
}

QXPoly q_derivative(const QXPoly& f) {
  std::vector<QPoly> c(f.degree() >= 1 ? static_cast<size_t>(f.degree()) : 0);
  for (int i = 1; i <= f.degree(); ++i)
    c[static_cast<size_t>(i - 1)] = f.coeff(i) * qint(i);
  return QXPoly(std::move(c), 'x');
}

std::vector<std::string> q_identity_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, def] : registry()) ids.push_back(id);
  return ids;
}

std::vector<std::map<std::string, long>> q_identity_grid(
    const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end())
    throw MathError("q_identity_grid: unknown id '" + id + "'");
  return it->second.grid();
}

CheckReport q_identity_check(const std::string& id,
                             const std::map<std::string, long>& params) {
  auto it = registry().find(id);
  if (it == registry().end())
    throw MathError("q_identity_check: unknown id '" + id + "'");
  const QIdentityDef& def = it->second;
  auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.id = id;
  rep.status = CheckStatus::kVerifiedUpTo;
  if (params.empty()) {
    rep.grid = def.grid_desc;
    for (const Params& inst : def.grid()) {
      std::string w = def.check(inst);
      if (!w.empty()) {
        rep.status = CheckStatus::kCounterexample;
        rep.witness = params_str(inst) + ": " + w;
        break;
      }
    }
    rep.checked_upto = def.grid_desc;
  } else {
    rep.grid = params_str(params);
    std::string w = def.check(params);
    if (!w.empty()) {
      rep.status = CheckStatus::kCounterexample;
      rep.witness = w;
    }
    rep.checked_upto = rep.grid;
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace stripcomb
