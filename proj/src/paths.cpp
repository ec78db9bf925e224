// Copyright 2026 The stripcomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stripcomb/paths.hpp>

#include <cassert>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace stripcomb {
namespace {

// A path at height h with r steps left has a forced final parity, so the
// admissible endpoint in {0, -1} is determined; prune when out of reach.
bool endpoint_reachable(int h, int r) {
  const int target = ((h + r) % 2 == 0) ? 0 : -1;
  return std::abs(h - target) <= r;
}

void enumerate_rec(int n, const StripSpec& strip, std::string& steps, int h,
                   std::vector<LatticePath>& out) {
  const int pos = static_cast<int>(steps.size());
  if (!endpoint_reachable(h, n - pos)) return;
  if (pos == n) {
    out.push_back(LatticePath{steps});
    return;
  }
  if (h - 1 >= strip.lower()) {
    steps.push_back('D');
    enumerate_rec(n, strip, steps, h - 1, out);
    steps.pop_back();
  }
  if (h + 1 <= strip.upper()) {
    steps.push_back('U');
    enumerate_rec(n, strip, steps, h + 1, out);
    steps.pop_back();
  }
}

// Scan accumulating counts by extremal-point number. prev is the last step
// taken (0 before the first step); a vertex becomes classifiable once the
// steps on both of its sides are known.
void weight_rec(int n, int pos, const StripSpec& strip, int h, char prev,
                int e, std::vector<BigInt>& by_e) {
  if (!endpoint_reachable(h, n - pos)) return;
  if (pos == n) {
    by_e[static_cast<size_t>(e)] += 1;
    return;
  }
  if (h - 1 >= strip.lower()) {
    const int peak = (prev == 'U' && h >= 1) ? 1 : 0;
    weight_rec(n, pos + 1, strip, h - 1, 'D', e + peak, by_e);
  }
  if (h + 1 <= strip.upper()) {
    const int valley = (prev == 'D' && h <= -2) ? 1 : 0;
    weight_rec(n, pos + 1, strip, h + 1, 'U', e + valley, by_e);
  }
}

void weight_prefix_rec(int n, int pos, const StripSpec& strip, int h,
                       char prev, int e, int forced_up,
                       std::vector<BigInt>& by_e) {
  if (!endpoint_reachable(h, n - pos)) return;
  if (pos == n) {
    by_e[static_cast<size_t>(e)] += 1;
    return;
  }
  if (pos < forced_up) {
    if (h + 1 > strip.upper()) return;
    weight_prefix_rec(n, pos + 1, strip, h + 1, 'U', e, forced_up, by_e);
    return;
  }
  if (h - 1 >= strip.lower()) {
    const int peak = (prev == 'U' && h >= 1) ? 1 : 0;
    weight_prefix_rec(n, pos + 1, strip, h - 1, 'D', e + peak, forced_up,
                      by_e);
  }
  if (h + 1 <= strip.upper()) {
    const int valley = (prev == 'D' && h <= -2) ? 1 : 0;
    weight_prefix_rec(n, pos + 1, strip, h + 1, 'U', e + valley, forced_up,
                      by_e);
  }
}

}  // namespace

std::vector<int> LatticePath::heights() const {
  std::vector<int> hs;
  hs.reserve(steps.size() + 1);
  hs.push_back(0);
  for (char s : steps) {
    assert(s == 'U' || s == 'D');
    hs.push_back(hs.back() + (s == 'U' ? 1 : -1));
  }
  return hs;
}

PathWeight path_weight(const LatticePath& path) {
  const std::vector<int> hs = path.heights();
  PathWeight w;
  for (size_t i = 1; i + 1 < hs.size(); ++i) {
    const bool peak = hs[i - 1] < hs[i] && hs[i] > hs[i + 1] && hs[i] >= 1;
    const bool valley = hs[i - 1] > hs[i] && hs[i] < hs[i + 1] && hs[i] <= -2;
    if (peak || valley) {
      w.e += 1;
      w.iota += static_cast<long>(i);
    }
  }
  return w;
}

std::vector<LatticePath> enumerate_strip(int n, int k) {
  assert(n >= 0 && k >= 0);
  std::vector<LatticePath> out;
  const StripSpec strip{k};
  std::string steps;
  steps.reserve(static_cast<size_t>(n));
  enumerate_rec(n, strip, steps, 0, out);
  return out;
}

Poly weight_poly_bruteforce(int n, int k) {
  assert(n >= 0 && k >= 0);
  std::vector<BigInt> by_e(static_cast<size_t>(n / 2 + 1), BigInt(0));
  weight_rec(n, 0, StripSpec{k}, 0, 0, 0, by_e);
  return Poly(by_e, 't');
}

std::vector<BigInt> walk_counts(int n, int k) {
  assert(n >= 0 && k >= 0);
  // Index m = 0..k+2 with the two boundary slots held at zero.
  std::vector<BigInt> v(static_cast<size_t>(k) + 3, BigInt(0));
  v[1] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(v.size(), BigInt(0));
    for (size_t m = 1; m + 1 < v.size(); ++m) next[m] = v[m - 1] + v[m + 1];
    v = std::move(next);
  }
  return std::vector<BigInt>(v.begin() + 1, v.end() - 1);
}

BigInt bounded_dyck(int n2, int k) {
  if (n2 % 2 != 0) throw MathError("bounded_dyck: path length must be even");
  assert(n2 >= 0 && k >= 0);
  static std::map<std::pair<int, int>, BigInt> cache;
  static std::mutex mu;
  const int n = n2 / 2;
  if (n == 0) return 1;
  if (k == 0) return 0;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  // First passage through height 1 splits the walk into a part of bound
  // k - 1 (shifted up) and an independent tail of bound k.
  BigInt total = 0;
  for (int j = 0; j <= n - 1; ++j)
    total += bounded_dyck(2 * j, k) * bounded_dyck(2 * n - 2 - 2 * j, k - 1);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, k), total);
  return total;
}

std::vector<std::vector<BigInt>> corridor_table(int n_max) {
  assert(n_max >= 0);
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({BigInt(1)});
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<BigInt>& p = rows.back();
    auto at = [&p](int j) {
      return (j >= 0 && j < static_cast<int>(p.size())) ? p[static_cast<size_t>(j)]
                                                        : BigInt(0);
    };
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = at(0) + at(1);
    for (int j = 1; j <= n; ++j) row[static_cast<size_t>(j)] = at(j - 1) + at(j + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Poly>> corridor_table_t(int n_max,
                                                std::optional<int> bound) {
  assert(n_max >= 0);
  assert(!bound || *bound >= 0);
  const Poly t = Poly::variable('t');
  std::vector<std::vector<Poly>> rows;
  rows.push_back({Poly(1)});
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Poly>& p = rows.back();
    const int width = bound ? std::min(n, *bound) : n;
    auto at = [&](int j) {
      if (j < 0 || j >= static_cast<int>(p.size())) return Poly(0);
      if (bound && j > *bound) return Poly(0);
      return p[static_cast<size_t>(j)];
    };
    std::vector<Poly> row(static_cast<size_t>(width) + 1, Poly(0));
    // The down-neighbor contribution picks up a factor t when it closes a
    // returning excursion: at j = 0 and at even columns j > 0.
    row[0] = at(0) + t * at(1);
    for (int j = 1; j <= width; ++j)
      row[static_cast<size_t>(j)] =
          at(j - 1) + (j % 2 == 0 ? t * at(j + 1) : at(j + 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

Poly weight_up_prefix(int n, int strip, int j) {
  if (strip % 2 != 1) throw MathError("weight_up_prefix: strip must be odd");
  assert(n >= 0 && j >= 0);
  std::vector<BigInt> by_e(static_cast<size_t>(n / 2 + 1), BigInt(0));
  if (j <= n) weight_prefix_rec(n, 0, StripSpec{strip}, 0, 0, 0, j, by_e);
  return Poly(by_e, 't');
}

namespace {

template <typename T, typename Fmt>
std::string table_csv_impl(const std::vector<std::vector<T>>& table, Fmt fmt) {
  std::ostringstream os;
  os << "n, j, value\n";
  for (size_t n = 0; n < table.size(); ++n)
    for (size_t j = 0; j < table[n].size(); ++j)
      os << n << ", " << j << ", " << fmt(table[n][j]) << "\n";
  return os.str();
}

}  // namespace

std::string table_csv(const std::vector<std::vector<BigInt>>& table) {
  return table_csv_impl(table, [](const BigInt& v) { return bigint_str(v); });
}

std::string table_csv(const std::vector<std::vector<Poly>>& table) {
  return table_csv_impl(table, [](const Poly& v) { return v.str_compact(); });
}

}  // namespace stripcomb
