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

#include "stripcomb/classic.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <vector>

namespace stripcomb {

namespace {

// Append-only caches; the mutex guards growth, entries are immutable
// once published.
struct FamilyCache {
  std::mutex mu;
  std::vector<BiPoly> vals;
};

const BiPoly& cached_family(FamilyCache& cache, int n, const BiPoly& f0,
                            const BiPoly& f1, const BiPoly& cx,
                            const BiPoly& cs) {
  if (n < 0) throw MathError("polynomial family: negative index");
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.vals.empty()) {
    cache.vals.push_back(f0);
    cache.vals.push_back(f1);
  }
  while (static_cast<int>(cache.vals.size()) <= n) {
    size_t m = cache.vals.size();
    cache.vals.push_back(cx * cache.vals[m - 1] + cs * cache.vals[m - 2]);
  }
#ifndef NDEBUG
  // Cached entries are re-verified against the recurrence on access.
  if (n >= 2) {
    size_t i = static_cast<size_t>(n);
    assert(cache.vals[i] == cx * cache.vals[i - 1] + cs * cache.vals[i - 2]);
  }
#endif
  return cache.vals[static_cast<size_t>(n)];
}

BiPoly var_x() { return BiPoly::variable('x'); }
BiPoly var_s() { return BiPoly(Poly::variable('s')); }

// 1 + (1-t)x^2 over Z[t][x].
BiPoly kernel_x() {
  return BiPoly(1) +
         BiPoly::monomial(Poly::from_ints({1, -1}, 't'), 2, 'x');
}

BiPoly kernel_s() { return BiPoly::monomial(Poly(-1), 2, 'x'); }

}  // namespace

const BiPoly& fib_poly(int n) {
  static FamilyCache cache;
  return cached_family(cache, n, BiPoly(0), BiPoly(1), var_x(), var_s());
}

const BiPoly& lucas_poly(int n) {
  static FamilyCache cache;
  return cached_family(cache, n, BiPoly(2), var_x(), var_x(), var_s());
}

const BiPoly& phi_poly(int n) {
  static FamilyCache cache;
  return cached_family(cache, n, BiPoly(0), BiPoly(1), kernel_x(),
                       kernel_s());
}

const BiPoly& lambda_poly(int n) {
  static FamilyCache cache;
  return cached_family(cache, n, BiPoly(2), kernel_x(), kernel_x(),
                       kernel_s());
}

namespace {

template <typename T>
T iterate_family(int n, const T& f0, const T& f1, const T& x0, const T& s0) {
  if (n < 0) throw MathError("polynomial family: negative index");
  if (n == 0) return f0;
  T prev = f0, cur = f1;
  for (int i = 1; i < n; ++i) {
    T next = x0 * cur + s0 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Poly fib_at(int n, const Poly& x0, const Poly& s0) {
  return iterate_family<Poly>(n, Poly(0), Poly(1), x0, s0);
}

Poly lucas_at(int n, const Poly& x0, const Poly& s0) {
  return iterate_family<Poly>(n, Poly(2), x0, x0, s0);
}

BiPoly fib_at2(int n, const BiPoly& x0, const BiPoly& s0) {
  return iterate_family<BiPoly>(n, BiPoly(0), BiPoly(1), x0, s0);
}

BiPoly lucas_at2(int n, const BiPoly& x0, const BiPoly& s0) {
  return iterate_family<BiPoly>(n, BiPoly(2), x0, x0, s0);
}

BigInt fibonacci(long n) {
  if (n < -1) throw MathError("fibonacci: index below -1");
  if (n == -1) return BigInt(1);
  BigInt r;
  mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt lucas_number(long n) {
  if (n < 0) throw MathError("lucas_number: negative index");
  BigInt r;
  mpz_lucnum_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt catalan(long n) {
  if (n < 0) throw MathError("catalan: negative index");
  return binom(2 * n, n) / (n + 1);
}

BigInt narayana(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw MathError("narayana: index out of range");
  return binom(n, k - 1) * binom(n, k) / n;
}

BigInt eulerian(long n, long k) {
  if (n < 1 || k < 0 || k >= n) throw MathError("eulerian: index out of range");
  // <n, k> = (k+1) <n-1, k> + (n-k) <n-1, k-1>, row 1 = (1).
  std::vector<BigInt> row{BigInt(1)};
  for (long m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
      BigInt v(0);
      if (i < m - 1) v += BigInt(i + 1) * row[static_cast<size_t>(i)];
      if (i >= 1) v += BigInt(m - i) * row[static_cast<size_t>(i) - 1];
      next[static_cast<size_t>(i)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

Poly r_poly(int j) {
  if (j < 0) throw MathError("r_poly: negative index");
  std::vector<BigInt> cs(static_cast<size_t>(2 * j) + 1, BigInt(0));
  for (int l = 0; l <= j; ++l) {
    BigInt b = binom(j, l);
    cs[static_cast<size_t>(2 * l)] = b * b;
    if (l >= 1) cs[static_cast<size_t>(2 * l) - 1] = b * binom(j, l - 1);
  }
  return Poly(std::move(cs), 'x');
}

CheckReport factorization_check_float(RootFamily family, int k) {
  if (k < 1) throw MathError("factorization_check_float: k must be >= 1");
  CheckReport rep;
  rep.grid = "k = " + std::to_string(k);
  const double pi = std::acos(-1.0);
  Poly p;
  std::vector<double> roots;
  switch (family) {
    case RootFamily::kFib:
      rep.id = "roots:F";
      p = fib_at(k + 1, Poly::variable('x'), Poly(-1));
      for (int j = 1; j <= k; ++j)
        roots.push_back(2.0 * std::cos(j * pi / (k + 1)));
      break;
    case RootFamily::kLucas:
      rep.id = "roots:L";
      p = lucas_at(k, Poly::variable('x'), Poly(-1));
      for (int j = 0; j < k; ++j)
        roots.push_back(2.0 * std::cos((2 * j + 1) * pi / (2 * k)));
      break;
    case RootFamily::kFibDiff:
      rep.id = "roots:F-F";
      p = fib_at(k + 1, Poly::variable('x'), Poly(-1)) -
          fib_at(k, Poly::variable('x'), Poly(-1));
      for (int j = 0; j < k; ++j)
        roots.push_back(2.0 * std::cos((2 * j + 1) * pi / (2 * k + 1)));
      break;
  }
  const double tol = 1e-9 * (1.0 + p.max_abs_coeff().get_d());
  for (size_t i = 0; i < roots.size(); ++i) {
    double v = p.eval_double(roots[i]);
    if (std::abs(v) >= tol) {
      rep.status = CheckStatus::kCounterexample;
      rep.witness = "root index " + std::to_string(i) + " value " +
                    std::to_string(v) + " tol " + std::to_string(tol);
      return rep;
    }
  }
  rep.status = CheckStatus::kVerifiedUpTo;
  rep.checked_upto = std::to_string(roots.size()) + " roots, tol " +
                     std::to_string(tol);
  return rep;
}

}  // namespace stripcomb
