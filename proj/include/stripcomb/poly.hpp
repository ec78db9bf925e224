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

#include <initializer_list>
#include <string>
#include <vector>

#include "stripcomb/numeric.hpp"

namespace stripcomb {

// Dense univariate polynomial over the integers with a variable tag.
//
// Invariants:
//  * no trailing zero coefficients; the zero polynomial has an empty
//    coefficient vector and degree() == -1;
//  * constants carry no variable tag (var() == 0) and mix freely with
//    any tagged polynomial; combining two distinct tags throws MathError.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT: implicit by design, constants are ubiquitous
  explicit Poly(BigInt c);
  Poly(std::vector<BigInt> coeffs, char var);

  static Poly variable(char var);
  static Poly monomial(BigInt c, int exp, char var);
  static Poly from_ints(std::initializer_list<long> coeffs, char var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;
  char var() const { return var_; }
  // Coefficient of var^i; zero outside the stored range.
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned long e) const;
  // Multiply by var^k, k >= 0.
  Poly shifted(int k) const;
  // Drop all terms of exponent > maxdeg.
  Poly truncated(int maxdeg) const;
  Poly derivative() const;

  BigInt eval(const BigInt& v) const;
  double eval_double(double v) const;
  // Substitute the variable by another polynomial.
  Poly subst(const Poly& v) const;
  // Reverse coefficients against a declared degree n >= degree():
  // returns var^n * p(1/var).
  Poly reversed(int n) const;

  // Quotient when the division is exact; throws MathError otherwise.
  Poly exact_div(const Poly& d) const;
  bool divisible_by(const Poly& d) const;
  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;

  BigInt max_abs_coeff() const;

  // Canonical form, ascending exponents: "1 + 4*t + 3*t^2", "0",
  // "2 - t^3". A spacer-free variant is available for CSV cells.
  std::string str() const;
  std::string str_compact() const;

 private:
  std::vector<BigInt> c_;
  char var_ = 0;

  void normalize();
  static char join_var(const Poly& a, const Poly& b);
};

// gcd with positive leading coefficient; primitive pseudo-remainder
// sequence, so it stays in integer arithmetic throughout.
Poly poly_gcd(Poly a, Poly b);

}  // namespace stripcomb
