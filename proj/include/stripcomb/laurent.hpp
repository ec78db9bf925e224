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

#include <string>
#include <vector>

#include "stripcomb/poly.hpp"

namespace stripcomb {

// Finite Laurent polynomial in one variable (default 'z') whose
// coefficients are integer polynomials, i.e. an element of Z[t][z, 1/z].
// Plain integer Laurent polynomials are the constant-coefficient case.
//
// Invariant: coefficient vector has nonzero first and last entries;
// the zero element has an empty vector and minexp() == 0.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT: implicit by design
  Laurent(Poly c);  // NOLINT: coefficient at exponent 0
  Laurent(std::vector<Poly> coeffs, int minexp, char var = 'z');

  static Laurent variable(char var = 'z');
  static Laurent monomial(Poly c, int exp, char var = 'z');

  bool is_zero() const { return c_.empty(); }
  int minexp() const { return min_; }
  int maxexp() const { return min_ + static_cast<int>(c_.size()) - 1; }
  char var() const { return var_; }
  const Poly& coeff(int e) const;
  BigInt coeff_int(int e) const;  // throws unless that coefficient is constant

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent scaled(const Poly& s) const;
  // Multiply by var^d (d of either sign).
  Laurent zshift(int d) const;
  // var -> 1/var.
  Laurent inverted() const;
  // True when the value is c * var^e with c a constant +1 or -1.
  bool is_unit_monomial(int* exp_out = nullptr, int* sign_out = nullptr) const;
  // Divide by a unit monomial.
  Laurent unit_div(const Laurent& u) const;

  // Substitute var := +1 or -1; collapses to a coefficient polynomial.
  Poly eval_pm1(int zval) const;
  // Substitute the coefficient variable by a constant.
  Laurent at_coeff_var(const BigInt& v) const;

  std::string str() const;

 private:
  std::vector<Poly> c_;
  int min_ = 0;
  char var_ = 'z';

  void normalize();
};

}  // namespace stripcomb
