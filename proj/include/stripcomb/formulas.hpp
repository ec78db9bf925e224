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

#ifndef STRIPCOMB_FORMULAS_HPP_
#define STRIPCOMB_FORMULAS_HPP_

#include <stripcomb/laurent.hpp>
#include <stripcomb/numeric.hpp>
#include <stripcomb/poly.hpp>

namespace stripcomb {

// Strip path count by inclusion-exclusion over reflected endpoints:
// sum over j of (-1)^j * binom(n, floor((n + (k+2)j) / 2)).
BigInt a_count(long n, long k);

// Extremal-weight polynomial in t as the explicit double binomial sum.
// Stated for k >= 1; k = 0 is rejected.
Poly a_poly(long n, long k);

// z-graded refinement: Laurent polynomial in z whose coefficients are
// polynomials in t. At z = -1 it collapses to a_poly; at t = 1 the z^j
// coefficient is binom(n, floor((n + (k+2)j) / 2)). k >= 1.
Laurent a_poly_z(long n, long k);

// Walk count on the path graph with vertices 1..k+1 as a closed binomial
// sum, defined for 0 <= m <= k+2 (both boundary slots evaluate to zero).
BigInt v_closed(long n, long m, long k);

// Trigonometric evaluation of the same walk count, double precision,
// defined for 1 <= m <= k+1.
double v_trig(long n, long m, long k);

}  // namespace stripcomb

#endif  // STRIPCOMB_FORMULAS_HPP_
