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

// Dense bivariate polynomial: outer variable with inner-polynomial
// coefficients, e.g. elements of Z[t][x].
//
// Invariants mirror Poly: no trailing zero coefficients, and outer-constant
// values (degree <= 0) mix freely with any outer tag. The outer tag must
// differ from the inner tag of every coefficient.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long c);  // NOLINT: implicit by design
  BiPoly(Poly c);  // NOLINT: inner polynomial as outer constant
  BiPoly(std::vector<Poly> coeffs, char outer_var);

  static BiPoly variable(char outer_var);
  static BiPoly monomial(Poly c, int exp, char outer_var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_outer_constant() const { return c_.size() <= 1; }
  char outer_var() const { return var_; }
  char inner_var() const;
  const Poly& coeff(int i) const;
  const std::vector<Poly>& coeffs() const { return c_; }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  bool operator==(const BiPoly& o) const;
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly pow(unsigned long e) const;
  BiPoly shifted(int k) const;
  BiPoly truncated(int maxdeg) const;

  // Substitute the outer variable (result collapses to an inner Poly).
  Poly eval_outer(const BigInt& v) const;
  // Substitute the outer variable by a bivariate polynomial.
  BiPoly subst_outer(const BiPoly& v) const;
  // Substitute the inner variable by a constant; coefficients collapse.
  BiPoly at_inner(const BigInt& v) const;
  // Substitute the inner variable by a polynomial in the inner variable.
  BiPoly subst_inner(const Poly& v) const;
  // outer_var -> -outer_var.
  BiPoly negate_outer() const;
  // Collapse to a univariate Poly; throws unless every coefficient is
  // an integer constant.
  Poly collapse() const;

  BiPoly exact_div(const BiPoly& d) const;
  bool divisible_by(const BiPoly& d) const;

  // Canonical form: "(1) + (1+t)*x^2"; inner coefficients always
  // parenthesized and compact.
  std::string str() const;

 private:
  std::vector<Poly> c_;
  char var_ = 0;

  void normalize();
  static char join_var(const BiPoly& a, const BiPoly& b);
  void check_inner(const Poly& p) const;
};

}  // namespace stripcomb
