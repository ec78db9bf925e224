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

// Registry of exact polynomial and series identities around the
// Fibonacci/Lucas families, Narayana-type binomial sums, and the
// derivative calculus behind them. Each entry verifies a closed grid of
// instances by exact expansion; see docs/identities.md for statements.

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "stripcomb/classic.hpp"

namespace stripcomb {

namespace {

using Params = std::map<std::string, long>;
using Coeffs = std::vector<BigInt>;

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

Poly pow_1mx(int e) {
  return Poly::from_ints({1, -1}, 'x').pow(static_cast<unsigned long>(e));
}

// prefix[i] = f(i) for 0 <= i <= trunc.
Coeffs series_prefix(int trunc, const std::function<BigInt(long)>& f) {
  Coeffs s(static_cast<size_t>(trunc) + 1);
  for (int i = 0; i <= trunc; ++i) s[static_cast<size_t>(i)] = f(i);
  return s;
}

// Multiply a series prefix by a polynomial; valid through the same order.
Coeffs mul_poly_series(const Poly& p, const Coeffs& s) {
  Coeffs out(s.size(), BigInt(0));
  for (int j = 0; j <= p.degree(); ++j) {
    const BigInt& c = p.coeff(j);
    if (c == 0) continue;
    for (size_t i = static_cast<size_t>(j); i < s.size(); ++i)
      out[i] += c * s[i - static_cast<size_t>(j)];
  }
  return out;
}

// D^j / j! applied to a series prefix; result valid through order
// s.size()-1-j. Coefficientwise: out[i] = s[i+j] * C(i+j, j).
Coeffs divided_derivative(const Coeffs& s, int j) {
  if (j == 0) return s;
  if (static_cast<size_t>(j) >= s.size()) return Coeffs{};
  Coeffs out(s.size() - static_cast<size_t>(j));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = s[i + static_cast<size_t>(j)] *
             binom(static_cast<long>(i) + j, j);
  return out;
}

// Compare a computed prefix against an exact polynomial: every computed
// coefficient must match, including zeros beyond the polynomial degree.
std::string match_poly(const Coeffs& got, const Poly& want) {
  for (size_t i = 0; i < got.size(); ++i) {
    if (got[i] != want.coeff(static_cast<int>(i))) {
      std::ostringstream out;
      out << "coefficient " << i << ": got " << got[i].get_str() << ", want "
          << want.coeff(static_cast<int>(i)).get_str();
      return out.str();
    }
  }
  return {};
}

std::string match_exact(const Poly& got, const Poly& want) {
  if (got == want) return {};
  return "lhs = " + got.str_compact() + ", rhs = " + want.str_compact();
}

std::string match_exact2(const BiPoly& got, const BiPoly& want) {
  if (got == want) return {};
  return "lhs = " + got.str() + ", rhs = " + want.str();
}

// ---- individual instances ------------------------------------------------

// L(n) and F(n) at (x+y, -xy) produce power sums and their differences.
std::string check_eq1_13(const Params& p) {
  int n = static_cast<int>(get_param(p, "n", 0));
  BiPoly X = BiPoly::variable('x') + BiPoly(Poly::variable('y'));
  BiPoly S = BiPoly::monomial(Poly::from_ints({0, -1}, 'y'), 1, 'x');
  BiPoly xn = BiPoly::monomial(Poly(1), n, 'x');
  BiPoly yn = BiPoly(Poly::monomial(BigInt(1), n, 'y'));
  std::string w = match_exact2(lucas_at2(n, X, S), xn + yn);
  if (!w.empty()) return "power-sum side: " + w;
  BiPoly diff = BiPoly::variable('x') - BiPoly(Poly::variable('y'));
  return match_exact2(fib_at2(n, X, S) * diff, xn - yn);
}

std::string check_lucas_from_fib(const Params& p) {
  int n = static_cast<int>(get_param(p, "n", 1));
  BiPoly s(Poly::variable('s'));
  return match_exact2(lucas_poly(n), fib_poly(n + 1) + s * fib_poly(n - 1));
}

std::string check_f2n_factor(const Params& p) {
  int n = static_cast<int>(get_param(p, "n", 0));
  return match_exact2(fib_poly(2 * n), fib_poly(n) * lucas_poly(n));
}

std::string check_fib_squares(const Params& p) {
  int k = static_cast<int>(get_param(p, "k", 0));
  BiPoly s(Poly::variable('s'));
  return match_exact2(fib_poly(k + 1) * fib_poly(k + 1) +
                          s * fib_poly(k) * fib_poly(k),
                      fib_poly(2 * k + 1));
}

std::string check_eq2_14(const Params& p) {
  int n = static_cast<int>(get_param(p, "n", 2));
  BiPoly kx = BiPoly(1) + BiPoly::monomial(Poly::from_ints({1, -1}, 't'), 2, 'x');
  BiPoly x2 = BiPoly::monomial(Poly(1), 2, 'x');
  std::string w = match_exact2(phi_poly(n),
                               kx * phi_poly(n - 1) - x2 * phi_poly(n - 2));
  if (!w.empty()) return w;
  return match_exact2(lambda_poly(n),
                      kx * lambda_poly(n - 1) - x2 * lambda_poly(n - 2));
}

std::string check_eq2_33(const Params& p) {
  long k = get_param(p, "k", 1);
  int trunc = static_cast<int>(get_param(p, "trunc", 4 * k + 24));
  Coeffs s = series_prefix(trunc, [k](long n) -> BigInt {
    return binom((n + 2 * k) / 2, k) * binom((n + 1 + 2 * k) / 2, k);
  });
  Poly mult = pow_1mx(2) * Poly::from_ints({1, 0, -1}, 'x')
                               .pow(static_cast<unsigned long>(2 * k - 1));
  return match_poly(mul_poly_series(mult, s), r_poly(static_cast<int>(k) - 1));
}

std::string check_eq2_34(const Params& p) {
  long k = get_param(p, "k", 1);
  int trunc = static_cast<int>(get_param(p, "trunc", 2 * k + 24));
  Coeffs s = series_prefix(trunc, [k](long i) -> BigInt {
    long n = i + 1;  // series index shift: coefficient of x^(n-1)
    return binom(n + k - 1, k) * binom(n + k, k);
  });
  std::vector<BigInt> rhs(static_cast<size_t>(k), BigInt(0));
  for (long j = 1; j <= k; ++j)
    rhs[static_cast<size_t>(j - 1)] = binom(k - 1, j - 1) * binom(k + 1, j);
  return match_poly(mul_poly_series(pow_1mx(static_cast<int>(2 * k + 1)), s),
                    Poly(std::move(rhs), 'x'));
}

Poly central_square_poly(long k) {
  std::vector<BigInt> rhs(static_cast<size_t>(k) + 1);
  for (long j = 0; j <= k; ++j) {
    BigInt b = binom(k, j);
    rhs[static_cast<size_t>(j)] = b * b;
  }
  return Poly(std::move(rhs), 'x');
}

std::string check_eq2_35(const Params& p) {
  long k = get_param(p, "k", 0);
  int trunc = static_cast<int>(get_param(p, "trunc", 2 * k + 24));
  Coeffs s = series_prefix(trunc, [k](long n) -> BigInt {
    BigInt b = binom(n + k, k);
    return b * b;
  });
  return match_poly(mul_poly_series(pow_1mx(static_cast<int>(2 * k + 1)), s),
                    central_square_poly(k));
}

Poly alternating_1mx_sum(long terms_hi, const std::function<BigInt(long)>& c) {
  // sum_{l=0..hi} (-1)^l c(l) (1-x)^l expanded in x.
  Poly acc;
  for (long l = 0; l <= terms_hi; ++l) {
    BigInt v = c(l);
    if (v == 0) continue;
    Poly term = pow_1mx(static_cast<int>(l)) * Poly(v);
    acc += (l % 2 == 0) ? term : -term;
  }
  return acc;
}

std::string check_eq2_36(const Params& p) {
  long k = get_param(p, "k", 0);
  long m = get_param(p, "m", 0);
  Poly lhs = alternating_1mx_sum(
      k - m, [&](long j) -> BigInt { return binom(k - m, j) * binom(2 * k - j, k); });
  std::vector<BigInt> rhs(static_cast<size_t>(k - m) + 1, BigInt(0));
  for (long j = m; j <= k; ++j)
    rhs[static_cast<size_t>(j - m)] = binom(k - m, j - m) * binom(k + m, j);
  return match_exact(lhs, Poly(std::move(rhs), 'x'));
}

std::string check_eq2_37(const Params& p) {
  long k = get_param(p, "k", 0);
  Poly lhs = alternating_1mx_sum(
      k, [&](long j) -> BigInt { return binom(k, j) * binom(2 * k - j, k); });
  return match_exact(lhs, central_square_poly(k));
}

std::string check_eq2_38(const Params& p) {
  long n = get_param(p, "n", 0);
  long m = get_param(p, "m", 0);
  long r = get_param(p, "r", 0);
  std::vector<BigInt> lhs(static_cast<size_t>(n) + 1);
  for (long j = 0; j <= n; ++j)
    lhs[static_cast<size_t>(j)] = binom(n, j) * binom(n + 2 * m + r, j + m);
  Poly zm1 = Poly::from_ints({-1, 1}, 'z');
  Poly rhs;
  for (long j = 0; j <= n; ++j) {
    BigInt c = binom(n, j) * binom(2 * n + 2 * m + r - j, n + m);
    rhs += zm1.pow(static_cast<unsigned long>(j)) * Poly(c);
  }
  return match_exact(Poly(std::move(lhs), 'z'), rhs);
}

// Closed form for the divided derivative of x^n/(1-x)^(k+1); defined for
// 0 <= n <= k so the vanishing convention of binom applies.
Poly deriv_closed_form(long k, long n, long j) {
  std::vector<BigInt> cs(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i)
    cs[static_cast<size_t>(i)] = binom(j + k - n, k - i) * binom(n, i);
  return Poly(std::move(cs), 'x');
}

// Series prefix of (1-x)^(k+j+1) * D^j/j! [x^n/(1-x)^(k+1)].
Coeffs deriv_series_form(long k, long n, long j, int trunc) {
  Coeffs base = series_prefix(trunc + static_cast<int>(j), [&](long i) -> BigInt {
    return i < n ? BigInt(0) : binom(i - n + k, k);
  });
  Coeffs d = divided_derivative(base, static_cast<int>(j));
  return mul_poly_series(pow_1mx(static_cast<int>(k + j + 1)), d);
}

std::string check_eq2_39(const Params& p) {
  long k = get_param(p, "k", 0);
  long n = get_param(p, "n", 0);
  long j = get_param(p, "j", 0);
  if (n > k) return {};  // outside the declared domain
  // Derivative definition against the closed form.
  int trunc = static_cast<int>(2 * k + j + 12);
  std::string w =
      match_poly(deriv_series_form(k, n, j, trunc), deriv_closed_form(k, n, j));
  if (!w.empty()) return "derivative form: " + w;
  // Recurrence b(n,j) = x b(n-1,j) + (1-x) b(n-1,j-1) plus boundaries.
  if (n >= 1 && j >= 1) {
    Poly rec = Poly::variable('x') * deriv_closed_form(k, n - 1, j) +
               pow_1mx(1) * deriv_closed_form(k, n - 1, j - 1);
    w = match_exact(deriv_closed_form(k, n, j), rec);
    if (!w.empty()) return "recurrence: " + w;
  }
  if (j == 0) {
    w = match_exact(deriv_closed_form(k, n, 0),
                    Poly::monomial(BigInt(1), static_cast<int>(n), 'x'));
    if (!w.empty()) return "boundary j=0: " + w;
  }
  if (n == 0) {
    w = match_exact(deriv_closed_form(k, 0, j), Poly(binom(j + k, k)));
    if (!w.empty()) return "boundary n=0: " + w;
  }
  return {};
}

std::string check_eq2_40(const Params& p) {
  long k = get_param(p, "k", 0);
  long m = get_param(p, "m", 0);
  long j = get_param(p, "j", 0);
  Params q{{"k", k}, {"n", k - m}, {"j", j}};
  return check_eq2_39(q);
}

std::string check_eq2_41(const Params& p) {
  long k = get_param(p, "k", 0);
  int trunc = static_cast<int>(get_param(p, "trunc", 2 * k + 24));
  // Computed through the divided-derivative route rather than the direct
  // series so it exercises an independent pipeline.
  Coeffs got = deriv_series_form(k, k, k, trunc);
  return match_poly(got, central_square_poly(k));
}

std::string check_eq2_42(const Params& p) {
  long k = get_param(p, "k", 2);
  int trunc = static_cast<int>(get_param(p, "trunc", 2 * k + 24));
  Coeffs s = series_prefix(trunc, [k](long i) -> BigInt {
    if (i == 0) return BigInt(0);  // series starts at x^1
    long n = i - 1;
    return binom(n + k, k) * binom(n + k - 1, k - 2);
  });
  std::vector<BigInt> rhs(static_cast<size_t>(k), BigInt(0));
  for (long i = 1; i <= k - 1; ++i)
    rhs[static_cast<size_t>(i)] = binom(k - 1, i - 1) * binom(k - 1, i);
  return match_poly(mul_poly_series(pow_1mx(static_cast<int>(2 * k - 1)), s),
                    Poly(std::move(rhs), 'x'));
}

std::string check_eq2_43(const Params& p) {
  long k = get_param(p, "k", 0);
  long m = get_param(p, "m", 0);
  long j = get_param(p, "j", 0);
  int trunc = static_cast<int>(2 * k + j + 12);
  Poly rhs = alternating_1mx_sum(
      k - m, [&](long l) -> BigInt { return binom(k - m, l) * binom(k + j - l, j); });
  return match_poly(deriv_series_form(k, k - m, j, trunc), rhs);
}

std::string check_eq2_44(const Params& p) {
  long k = get_param(p, "k", 0);
  long m = get_param(p, "m", 0);
  long j = get_param(p, "j", 0);
  std::vector<BigInt> lhs(static_cast<size_t>(k - m) + 1);
  for (long i = 0; i <= k - m; ++i)
    lhs[static_cast<size_t>(i)] = binom(j + m, k - i) * binom(k - m, i);
  Poly rhs = alternating_1mx_sum(
      k - m, [&](long l) -> BigInt { return binom(k - m, l) * binom(k + j - l, j); });
  return match_exact(Poly(std::move(lhs), 'x'), rhs);
}

std::string check_eq2_45(const Params& p) {
  long k = get_param(p, "k", 1);
  // Cross-multiplied by k(k+1) to stay in integer arithmetic.
  std::vector<BigInt> lhs(static_cast<size_t>(k) + 1, BigInt(0));
  for (long i = 1; i <= k; ++i)
    lhs[static_cast<size_t>(i)] = BigInt(k + 1) * binom(k, i - 1) * binom(k, i);
  Poly rhs = alternating_1mx_sum(k, [&](long l) -> BigInt {
    return BigInt(k) * binom(k + 1, l) * binom(2 * k - l, k);
  });
  return match_exact(Poly(std::move(lhs), 'x'), rhs);
}

// ---- registry -------------------------------------------------------------

struct IdentityDef {
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

std::vector<Params> grid_km(long khi) {
  std::vector<Params> g;
  for (long k = 0; k <= khi; ++k)
    for (long m = 0; m <= k; ++m) g.push_back({{"k", k}, {"m", m}});
  return g;
}

std::vector<Params> grid_kmj(long khi, long jhi) {
  std::vector<Params> g;
  for (long k = 0; k <= khi; ++k)
    for (long m = 0; m <= k; ++m)
      for (long j = 0; j <= jhi; ++j)
        g.push_back({{"k", k}, {"m", m}, {"j", j}});
  return g;
}

std::vector<Params> grid_knj(long khi) {
  std::vector<Params> g;
  for (long k = 0; k <= khi; ++k)
    for (long n = 0; n <= k; ++n)
      for (long j = 0; j <= k + 2; ++j)
        g.push_back({{"k", k}, {"n", n}, {"j", j}});
  return g;
}

std::vector<Params> grid_nmr(long hi) {
  std::vector<Params> g;
  for (long n = 0; n <= hi; ++n)
    for (long m = 0; m <= hi; ++m)
      for (long r = 0; r <= hi; ++r)
        g.push_back({{"n", n}, {"m", m}, {"r", r}});
  return g;
}

const std::map<std::string, IdentityDef>& registry() {
  static const std::map<std::string, IdentityDef> defs = {
      {"eq1.13",
       {"0 <= n <= 32", [] { return grid_n(0, 32); }, check_eq1_13}},
      {"lucas_from_fib",
       {"1 <= n <= 40", [] { return grid_n(1, 40); }, check_lucas_from_fib}},
      {"F2n_factor",
       {"0 <= n <= 20", [] { return grid_n(0, 20); }, check_f2n_factor}},
      {"fib_squares",
       {"0 <= k <= 20", [] { return grid_k(0, 20); }, check_fib_squares}},
      {"eq2.14",
       {"2 <= n <= 40", [] { return grid_n(2, 40); }, check_eq2_14}},
      {"eq2.33",
       {"1 <= k <= 8", [] { return grid_k(1, 8); }, check_eq2_33}},
      {"eq2.34",
       {"1 <= k <= 10", [] { return grid_k(1, 10); }, check_eq2_34}},
      {"eq2.35",
       {"0 <= k <= 10", [] { return grid_k(0, 10); }, check_eq2_35}},
      {"eq2.36",
       {"0 <= m <= k <= 10", [] { return grid_km(10); }, check_eq2_36}},
      {"eq2.37",
       {"0 <= k <= 12", [] { return grid_k(0, 12); }, check_eq2_37}},
      {"eq2.38",
       {"0 <= n,m,r <= 6", [] { return grid_nmr(6); }, check_eq2_38}},
      {"eq2.39",
       {"0 <= n <= k <= 8, 0 <= j <= k+2", [] { return grid_knj(8); },
        check_eq2_39}},
      {"eq2.40",
       {"0 <= m <= k <= 8, 0 <= j <= 8", [] { return grid_kmj(8, 8); },
        check_eq2_40}},
      {"eq2.41",
       {"0 <= k <= 10", [] { return grid_k(0, 10); }, check_eq2_41}},
      {"eq2.42",
       {"2 <= k <= 10", [] { return grid_k(2, 10); }, check_eq2_42}},
      {"eq2.43",
       {"0 <= m <= k <= 8, 0 <= j <= 8", [] { return grid_kmj(8, 8); },
        check_eq2_43}},
      {"eq2.44",
       {"0 <= m <= k <= 8, 0 <= j <= 8", [] { return grid_kmj(8, 8); },
        check_eq2_44}},
      {"eq2.45",
       {"1 <= k <= 12", [] { return grid_k(1, 12); }, check_eq2_45}},
  };
  return defs;
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, def] : registry()) ids.push_back(id);
  return ids;
}

std::vector<std::map<std::string, long>> identity_grid(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end())
    throw MathError("identity_grid: unknown id '" + id + "'");
  return it->second.grid();
}

CheckReport identity_check(const std::string& id,
                           const std::map<std::string, long>& params) {
  auto it = registry().find(id);
  if (it == registry().end())
    throw MathError("identity_check: unknown id '" + id + "'");
  const IdentityDef& def = it->second;
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
