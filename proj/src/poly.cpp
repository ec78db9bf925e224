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

#include "stripcomb/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace stripcomb {

namespace {
const BigInt kZero(0);
}  // namespace

Poly::Poly(long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

Poly::Poly(BigInt c) {
  if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<BigInt> coeffs, char var)
    : c_(std::move(coeffs)), var_(var) {
  normalize();
}

Poly Poly::variable(char var) { return monomial(BigInt(1), 1, var); }

Poly Poly::monomial(BigInt c, int exp, char var) {
  if (exp < 0) throw MathError("Poly::monomial: negative exponent");
  if (c == 0) return Poly();
  std::vector<BigInt> cs(static_cast<size_t>(exp) + 1, kZero);
  cs.back() = std::move(c);
  return Poly(std::move(cs), var);
}

Poly Poly::from_ints(std::initializer_list<long> coeffs, char var) {
  std::vector<BigInt> cs;
  cs.reserve(coeffs.size());
  for (long v : coeffs) cs.emplace_back(v);
  return Poly(std::move(cs), var);
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.size() <= 1) var_ = 0;
}

char Poly::join_var(const Poly& a, const Poly& b) {
  if (a.var_ == 0) return b.var_;
  if (b.var_ == 0 || a.var_ == b.var_) return a.var_;
  throw MathError(std::string("Poly: variable mismatch '") + a.var_ +
                  "' vs '" + b.var_ + "'");
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const BigInt& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const BigInt& Poly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  var_ = join_var(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  var_ = join_var(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.var_ = Poly::join_var(a, b);
  if (a.c_.empty() || b.c_.empty()) return Poly();
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  if (c_ != o.c_) return false;
  // An unset tag joins with anything, mirroring arithmetic.
  return c_.size() <= 1 || var_ == o.var_ || var_ == 0 || o.var_ == 0;
}

Poly Poly::pow(unsigned long e) const {
  Poly r(1), base(*this);
  while (e > 0) {
    if (e & 1UL) r *= base;
    base *= base;
    e >>= 1UL;
  }
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw MathError("Poly::shifted: negative shift");
  if (is_zero()) return Poly();
  Poly r(*this);
  r.c_.insert(r.c_.begin(), static_cast<size_t>(k), kZero);
  return r;
}

Poly Poly::truncated(int maxdeg) const {
  Poly r(*this);
  if (maxdeg < 0) return Poly();
  if (static_cast<int>(r.c_.size()) > maxdeg + 1) {
    r.c_.resize(static_cast<size_t>(maxdeg) + 1);
    r.normalize();
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<BigInt> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(i);
  return Poly(std::move(d), var_);
}

BigInt Poly::eval(const BigInt& v) const {
  BigInt r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
  return r;
}

double Poly::eval_double(double v) const {
  double r = 0.0;
  for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i].get_d();
  return r;
}

Poly Poly::subst(const Poly& v) const {
  Poly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * v + Poly(c_[i]);
  return r;
}

Poly Poly::reversed(int n) const {
  if (n < degree()) throw MathError("Poly::reversed: declared degree too low");
  std::vector<BigInt> cs(static_cast<size_t>(n) + 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i) cs[static_cast<size_t>(n) - i] = c_[i];
  return Poly(std::move(cs), var_);
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw MathError("Poly::exact_div: division by zero");
  char var = join_var(*this, d);
  if (is_zero()) return Poly();
  if (degree() < d.degree())
    throw MathError("Poly::exact_div: not divisible (degree)");
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quot(c_.size() - d.c_.size() + 1, kZero);
  const BigInt& lead = d.c_.back();
  for (size_t qi = quot.size(); qi-- > 0;) {
    BigInt top = rem[qi + d.c_.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw MathError("Poly::exact_div: not divisible (coefficient)");
    BigInt q = top / lead;
    quot[qi] = q;
    for (size_t j = 0; j < d.c_.size(); ++j) rem[qi + j] -= q * d.c_[j];
  }
  for (const auto& v : rem)
    if (v != 0) throw MathError("Poly::exact_div: nonzero remainder");
  return Poly(std::move(quot), var);
}

bool Poly::divisible_by(const Poly& d) const {
  try {
    (void)exact_div(d);
    return true;
  } catch (const MathError&) {
    return false;
  }
}

BigInt Poly::content() const {
  BigInt g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt Poly::max_abs_coeff() const {
  BigInt m(0);
  for (const auto& v : c_) {
    BigInt a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

namespace {

// One term, magnitude only; the caller has already emitted the sign.
void append_term(std::ostringstream& out, const BigInt& c, int exp, char var) {
  BigInt a = abs(c);
  if (exp == 0) {
    out << a.get_str();
    return;
  }
  if (a != 1) out << a.get_str() << "*";
  out << var;
  if (exp > 1) out << "^" << exp;
}

std::string poly_str(const std::vector<BigInt>& cs, char var, bool spaced) {
  if (cs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    if (first) {
      if (cs[i] < 0) out << "-";
    } else {
      out << (spaced ? (cs[i] < 0 ? " - " : " + ") : (cs[i] < 0 ? "-" : "+"));
    }
    append_term(out, cs[i], static_cast<int>(i), var);
    first = false;
  }
  return out.str();
}

}  // namespace

std::string Poly::str() const { return poly_str(c_, var_ ? var_ : 'x', true); }

std::string Poly::str_compact() const {
  return poly_str(c_, var_ ? var_ : 'x', false);
}

namespace {

Poly primitive_part(const Poly& p) {
  BigInt c = p.content();
  if (c == 0 || c == 1) return p;
  return p.exact_div(Poly(c));
}

// Pseudo-remainder of a by b (b nonzero), keeping integer coefficients.
Poly pseudo_rem(Poly a, const Poly& b) {
  const BigInt& lead = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    Poly t = Poly(a.leading()) * b.shifted(shift);
    a = Poly(lead) * a - t;
  }
  return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

}  // namespace stripcomb
