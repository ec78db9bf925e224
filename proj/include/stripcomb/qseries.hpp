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

#ifndef STRIPCOMB_QSERIES_HPP_
#define STRIPCOMB_QSERIES_HPP_

#include <map>
#include <string>
#include <vector>

#include "stripcomb/bipoly.hpp"
#include "stripcomb/poly.hpp"
#include "stripcomb/report.hpp"

namespace stripcomb {

// Polynomials in q, and polynomials in x with coefficients in Z[q]. All
// arithmetic stays in Z[q]; the divisions behind D_q and the q-binomials
// are realized by recurrences instead of rational functions.
using QPoly = Poly;     // variable 'q'
using QXPoly = BiPoly;  // outer variable 'x', inner 'q'

// [n]_q = 1 + q + ... + q^(n-1); zero for n <= 0.
QPoly qint(long n);

// Gaussian binomial via the q-Pascal recurrence; 0 outside 0 <= k <= n.
QPoly qbinom(long n, long k);

// (x^e; q)_n = prod_{j=0}^{n-1} (1 - q^j x^e); n >= 0.
QXPoly qpochhammer(int x_exp, int n);

// prod_{j=0}^{n-1} (1 - q^(start + j*step) x^(x_exp)).
QXPoly qpoch_general(int n, int start, int step, int x_exp);

// D_q f(x) = (f(x) - f(qx)) / ((1-q)x); maps x^n to [n]_q x^(n-1).
QXPoly q_derivative(const QXPoly& f);

// Exact verification of a registered q-identity. Ids are namespaced
// "q:eqN.M". With empty params the full declared grid runs; otherwise
// the given instance. Unknown ids throw MathError.
CheckReport q_identity_check(const std::string& id,
                             const std::map<std::string, long>& params = {});
std::vector<std::string> q_identity_ids();

// Declared verification grid of one identity, as parameter tuples in run
// order. Lets drivers filter or parallelize over cells.
std::vector<std::map<std::string, long>> q_identity_grid(
    const std::string& id);

}  // namespace stripcomb

#endif  // STRIPCOMB_QSERIES_HPP_
