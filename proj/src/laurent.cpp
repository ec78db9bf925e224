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

#include "stripcomb/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace stripcomb {

namespace {
const Poly kZeroPoly;
}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) c_.emplace_back(c);
}

Laurent::Laurent(Poly c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Laurent::Laurent(std::vector<Poly> coeffs, int minexp, char var)
    : c_(std::move(coeffs)), min_(minexp), var_(var) {
  normalize();
}

Laurent Laurent::variable(char var) { return monomial(Poly(1), 1, var); }

Laurent Laurent::monomial(Poly c, int exp, char var) {
  if (c.is_zero()) return Laurent();
  Laurent r;
  r.c_.push_back(std::move(c));
  r.min_ = exp;
  r.var_ = var;
  return r;
}

void Laurent::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    min_ = 0;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  min_ += static_cast<int>(lead);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& Laurent::coeff(int e) const {
  if (e < min_ || e > maxexp()) return kZeroPoly;
  return c_[static_cast<size_t>(e - min_)];
}

BigInt Laurent::coeff_int(int e) const {
  const Poly& p = coeff(e);
  if (!p.is_constant()) throw MathError("Laurent::coeff_int: not constant");
  return p.coeff(0);
}

Laurent Laurent::operator-() const {
  Laurent r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(min_, o.min_);
  int hi = std::max(maxexp(), o.maxexp());
  std::vector<Poly> cs(static_cast<size_t>(hi - lo) + 1);
  for (int e = min_; e <= maxexp(); ++e) cs[static_cast<size_t>(e - lo)] = coeff(e);
  for (int e = o.min_; e <= o.maxexp(); ++e)
    cs[static_cast<size_t>(e - lo)] += o.coeff(e);
  c_ = std::move(cs);
  min_ = lo;
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  Laurent r;
  r.var_ = a.var_;
  r.min_ = a.min_ + b.min_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Poly());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  return min_ == o.min_ && c_ == o.c_;
}

Laurent Laurent::scaled(const Poly& s) const {
  Laurent r(*this);
  for (auto& p : r.c_) p *= s;
  r.normalize();
  return r;
}

Laurent Laurent::zshift(int d) const {
  Laurent r(*this);
  if (!r.is_zero()) r.min_ += d;
  return r;
}

Laurent Laurent::inverted() const {
  Laurent r;
  r.var_ = var_;
  if (is_zero()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.min_ = -maxexp();
  return r;
}

bool Laurent::is_unit_monomial(int* exp_out, int* sign_out) const {
  if (c_.size() != 1) return false;
  const Poly& p = c_[0];
  if (!p.is_constant()) return false;
  const BigInt& v = p.coeff(0);
  if (v != 1 && v != -1) return false;
  if (exp_out) *exp_out = min_;
  if (sign_out) *sign_out = (v == 1) ? 1 : -1;
  return true;
}

Laurent Laurent::unit_div(const Laurent& u) const {
  int e = 0, s = 0;
  if (!u.is_unit_monomial(&e, &s))
    throw MathError("Laurent::unit_div: divisor is not a unit monomial");
  Laurent r = zshift(-e);
  return s == 1 ? r : -r;
}

Poly Laurent::eval_pm1(int zval) const {
  if (zval != 1 && zval != -1)
    throw MathError("Laurent::eval_pm1: argument must be +1 or -1");
  Poly r;
  for (int e = min_; e <= maxexp(); ++e) {
    const Poly& p = coeff(e);
    if (p.is_zero()) continue;
    // (-1)^e for negative e follows parity as well.
    bool neg = (zval == -1) && ((e % 2) != 0);
    r += neg ? -p : p;
  }
  return r;
}

Laurent Laurent::at_coeff_var(const BigInt& v) const {
  Laurent r;
  r.var_ = var_;
  if (is_zero()) return r;
  r.min_ = min_;
  r.c_.reserve(c_.size());
  for (const auto& p : c_) r.c_.emplace_back(Poly(p.eval(v)));
  r.normalize();
  return r;
}

std::string Laurent::str() const {
  if (is_zero()) return "(0)";
  std::ostringstream out;
  bool first = true;
  for (int e = min_; e <= maxexp(); ++e) {
    const Poly& p = coeff(e);
    if (p.is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << p.str_compact() << ")";
    if (e != 0) {
      out << "*" << var_;
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

}  // namespace stripcomb
