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

#include "stripcomb/series.hpp"

#include <utility>

namespace stripcomb {

std::vector<Poly> series_expand(const RatFunc& f, int order, int inner_trunc) {
  if (order < 0) throw MathError("series_expand: negative order");
  const BiPoly& num = f.num();
  const BiPoly& den = f.den();
  const Poly& d0 = den.coeff(0);
  if (!d0.is_constant() || d0.is_zero())
    throw MathError(
        "series_expand: denominator constant term is not an invertible "
        "integer");
  const BigInt& d = d0.coeff(0);
  std::vector<Poly> out(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Poly acc = num.coeff(n);
    for (int i = 1; i <= n && i <= den.degree(); ++i)
      acc -= den.coeff(i) * out[static_cast<size_t>(n - i)];
    if (d != 1) {
      if (d == -1) {
        acc = -acc;
      } else {
        std::vector<BigInt> cs;
        cs.reserve(static_cast<size_t>(acc.degree()) + 1);
        for (int j = 0; j <= acc.degree(); ++j) {
          const BigInt& cj = acc.coeff(j);
          if (!mpz_divisible_p(cj.get_mpz_t(), d.get_mpz_t()))
            throw MathError("series_expand: non-integer series coefficient");
          cs.push_back(cj / d);
        }
        acc = Poly(std::move(cs), acc.var());
      }
    }
    if (inner_trunc >= 0) acc = acc.truncated(inner_trunc);
    out[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

std::vector<BigInt> series_numbers(const RatFunc& f, int order) {
  std::vector<Poly> ps = series_expand(f, order);
  std::vector<BigInt> out;
  out.reserve(ps.size());
  for (const auto& p : ps) {
    if (!p.is_constant())
      throw MathError("series_numbers: coefficient is not an integer");
    out.push_back(p.coeff(0));
  }
  return out;
}

namespace {
const Laurent kZeroLaurent;
}  // namespace

XLaurent::XLaurent(Laurent c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

XLaurent::XLaurent(std::vector<Laurent> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

XLaurent XLaurent::from_bipoly(const BiPoly& p) {
  std::vector<Laurent> cs;
  cs.reserve(static_cast<size_t>(p.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i) cs.emplace_back(p.coeff(i));
  return XLaurent(std::move(cs));
}

XLaurent XLaurent::monomial(Laurent c, int exp) {
  if (exp < 0) throw MathError("XLaurent::monomial: negative exponent");
  if (c.is_zero()) return XLaurent();
  std::vector<Laurent> cs(static_cast<size_t>(exp) + 1);
  cs.back() = std::move(c);
  return XLaurent(std::move(cs));
}

void XLaurent::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Laurent& XLaurent::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroLaurent;
  return c_[static_cast<size_t>(i)];
}

XLaurent XLaurent::operator-() const {
  XLaurent r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

XLaurent& XLaurent::operator+=(const XLaurent& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
  if (a.c_.empty() || b.c_.empty()) return XLaurent();
  XLaurent r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Laurent());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

XLaurent XLaurent::scaled(const Laurent& s) const {
  XLaurent r(*this);
  for (auto& v : r.c_) v *= s;
  r.normalize();
  return r;
}

XLaurent XLaurent::shifted(int k) const {
  if (k < 0) throw MathError("XLaurent::shifted: negative shift");
  if (is_zero()) return *this;
  XLaurent r(*this);
  r.c_.insert(r.c_.begin(), static_cast<size_t>(k), Laurent());
  return r;
}

std::vector<Laurent> zseries_expand(const ZRatFunc& f, int order) {
  if (order < 0) throw MathError("zseries_expand: negative order");
  const Laurent& d0 = f.den.coeff(0);
  if (!d0.is_unit_monomial())
    throw MathError(
        "zseries_expand: denominator constant term is not a unit monomial");
  std::vector<Laurent> out(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Laurent acc = f.num.coeff(n);
    for (int i = 1; i <= n && i <= f.den.degree(); ++i)
      acc -= f.den.coeff(i) * out[static_cast<size_t>(n - i)];
    out[static_cast<size_t>(n)] = acc.unit_div(d0);
  }
  return out;
}

}  // namespace stripcomb
