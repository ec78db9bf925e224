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

#include "stripcomb/bipoly.hpp"

#include <sstream>
#include <utility>

namespace stripcomb {

namespace {
const Poly kZeroPoly;
}  // namespace

BiPoly::BiPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

BiPoly::BiPoly(Poly c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

BiPoly::BiPoly(std::vector<Poly> coeffs, char outer_var)
    : c_(std::move(coeffs)), var_(outer_var) {
  for (const auto& p : c_) check_inner(p);
  normalize();
}

BiPoly BiPoly::variable(char outer_var) {
  return monomial(Poly(1), 1, outer_var);
}

BiPoly BiPoly::monomial(Poly c, int exp, char outer_var) {
  if (exp < 0) throw MathError("BiPoly::monomial: negative exponent");
  if (c.is_zero()) return BiPoly();
  std::vector<Poly> cs(static_cast<size_t>(exp) + 1);
  cs.back() = std::move(c);
  return BiPoly(std::move(cs), outer_var);
}

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.size() <= 1) var_ = 0;
}

char BiPoly::join_var(const BiPoly& a, const BiPoly& b) {
  if (a.var_ == 0) return b.var_;
  if (b.var_ == 0 || a.var_ == b.var_) return a.var_;
  throw MathError(std::string("BiPoly: outer variable mismatch '") + a.var_ +
                  "' vs '" + b.var_ + "'");
}

void BiPoly::check_inner(const Poly& p) const {
  if (var_ != 0 && p.var() == var_)
    throw MathError("BiPoly: inner coefficient uses the outer variable");
}

char BiPoly::inner_var() const {
  for (const auto& p : c_)
    if (p.var() != 0) return p.var();
  return 0;
}

const Poly& BiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroPoly;
  return c_[static_cast<size_t>(i)];
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  var_ = join_var(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  var_ = join_var(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  r.var_ = BiPoly::join_var(a, b);
  if (a.c_.empty() || b.c_.empty()) return BiPoly();
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Poly());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

bool BiPoly::operator==(const BiPoly& o) const {
  if (c_ != o.c_) return false;
  return c_.size() <= 1 || var_ == o.var_;
}

BiPoly BiPoly::pow(unsigned long e) const {
  BiPoly r(1), base(*this);
  while (e > 0) {
    if (e & 1UL) r *= base;
    base *= base;
    e >>= 1UL;
  }
  return r;
}

BiPoly BiPoly::shifted(int k) const {
  if (k < 0) throw MathError("BiPoly::shifted: negative shift");
  if (is_zero()) return BiPoly();
  BiPoly r(*this);
  r.c_.insert(r.c_.begin(), static_cast<size_t>(k), Poly());
  return r;
}

BiPoly BiPoly::truncated(int maxdeg) const {
  BiPoly r(*this);
  if (maxdeg < 0) return BiPoly();
  if (static_cast<int>(r.c_.size()) > maxdeg + 1) {
    r.c_.resize(static_cast<size_t>(maxdeg) + 1);
    r.normalize();
  }
  return r;
}

Poly BiPoly::eval_outer(const BigInt& v) const {
  Poly r;
  Poly scalar{BigInt(v)};
  for (size_t i = c_.size(); i-- > 0;) r = r * scalar + c_[i];
  return r;
}

BiPoly BiPoly::subst_outer(const BiPoly& v) const {
  BiPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * v + BiPoly(c_[i]);
  return r;
}

BiPoly BiPoly::at_inner(const BigInt& v) const {
  std::vector<Poly> cs;
  cs.reserve(c_.size());
  for (const auto& p : c_) cs.emplace_back(p.eval(v));
  return BiPoly(std::move(cs), var_);
}

BiPoly BiPoly::subst_inner(const Poly& v) const {
  std::vector<Poly> cs;
  cs.reserve(c_.size());
  for (const auto& p : c_) cs.push_back(p.subst(v));
  return BiPoly(std::move(cs), var_);
}

BiPoly BiPoly::negate_outer() const {
  BiPoly r(*this);
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly BiPoly::collapse() const {
  std::vector<BigInt> cs;
  cs.reserve(c_.size());
  for (const auto& p : c_) {
    if (!p.is_constant()) throw MathError("BiPoly::collapse: not univariate");
    cs.push_back(p.coeff(0));
  }
  return Poly(std::move(cs), var_);
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
  if (d.is_zero()) throw MathError("BiPoly::exact_div: division by zero");
  char var = join_var(*this, d);
  if (is_zero()) return BiPoly();
  if (degree() < d.degree())
    throw MathError("BiPoly::exact_div: not divisible (degree)");
  std::vector<Poly> rem = c_;
  std::vector<Poly> quot(c_.size() - d.c_.size() + 1);
  const Poly& lead = d.c_.back();
  for (size_t qi = quot.size(); qi-- > 0;) {
    const Poly& top = rem[qi + d.c_.size() - 1];
    if (top.is_zero()) continue;
    Poly q = top.exact_div(lead);  // throws when the inner division fails
    quot[qi] = q;
    for (size_t j = 0; j < d.c_.size(); ++j) rem[qi + j] -= q * d.c_[j];
  }
  for (const auto& p : rem)
    if (!p.is_zero()) throw MathError("BiPoly::exact_div: nonzero remainder");
  return BiPoly(std::move(quot), var);
}

bool BiPoly::divisible_by(const BiPoly& d) const {
  try {
    (void)exact_div(d);
    return true;
  } catch (const MathError&) {
    return false;
  }
}

std::string BiPoly::str() const {
  if (is_zero()) return "(0)";
  std::ostringstream out;
  char v = var_ ? var_ : 'x';
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << c_[i].str_compact() << ")";
    if (i >= 1) {
      out << "*" << v;
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace stripcomb
