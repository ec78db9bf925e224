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

#ifndef STRIPCOMB_PATHS_HPP_
#define STRIPCOMB_PATHS_HPP_

#include <optional>
#include <string>
#include <vector>

#include <stripcomb/numeric.hpp>
#include <stripcomb/poly.hpp>

namespace stripcomb {

// Height window for the strip of width k: -floor((k+1)/2) <= y <= floor(k/2).
struct StripSpec {
  int k = 0;

  int lower() const { return -((k + 1) / 2); }
  int upper() const { return k / 2; }
};

// A +-1 step path starting at height 0, serialized over {U, D}.
struct LatticePath {
  std::string steps;

  // Heights visited, steps.size() + 1 entries, heights().front() == 0.
  std::vector<int> heights() const;
};

// Extremal-point statistics: peaks at height >= 1 and valleys at height
// <= -2, over interior vertices only. e counts them, iota sums their
// x-coordinates.
struct PathWeight {
  long e = 0;
  long iota = 0;
};

PathWeight path_weight(const LatticePath& path);

// All paths of length n inside StripSpec(k) ending at height 0 or -1, in
// lexicographic step order with D < U.
std::vector<LatticePath> enumerate_strip(int n, int k);

// Sum of t^e over the same path set, by direct scan with strip and
// endpoint-reachability pruning. Feasible up to n of about 22.
Poly weight_poly_bruteforce(int n, int k);

// Walk counts on the path graph with vertices 1..k+1 starting at vertex 1;
// entry m-1 of the result holds the number of n-step walks ending at m.
std::vector<BigInt> walk_counts(int n, int k);

// Height-bounded Dyck count (walks 1 -> 1 of even length n2, bound k) via
// the first-return convolution; must agree with walk_counts(n2, k)[0].
BigInt bounded_dyck(int n2, int k);

// Corridor triangle of nonnegative paths with floor moves; row n holds
// c(n, j) for j = 0..n and c(n, j) = binom(n, floor((n-j)/2)).
std::vector<std::vector<BigInt>> corridor_table(int n_max);

// t-weighted corridor triangle. Without a bound, row n holds j = 0..n.
// With bound b the columns are capped at j = b and the entry beyond the
// cap is pinned to zero, which specializes column 0 to the strip counts of
// width 2b+1 at t = 1.
std::vector<std::vector<Poly>> corridor_table_t(int n_max,
                                                std::optional<int> bound = {});

// Weight of the paths of the odd strip that start with at least j up-steps.
Poly weight_up_prefix(int n, int strip, int j);

// CSV dump of a triangular table, header "n, j, value".
std::string table_csv(const std::vector<std::vector<BigInt>>& table);
std::string table_csv(const std::vector<std::vector<Poly>>& table);

}  // namespace stripcomb

#endif  // STRIPCOMB_PATHS_HPP_
