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

#include "stripcomb/matrix.hpp"

#include <utility>

namespace stripcomb {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw MathError("Matrix: negative dimension");
  e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), BiPoly());
}

BiPoly& Matrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw MathError("Matrix::at: index out of range");
  return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
            static_cast<size_t>(c)];
}

const BiPoly& Matrix::at(int r, int c) const {
  return const_cast<Matrix*>(this)->at(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw MathError("Matrix: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BiPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Matrix Matrix::identity(int n) {
  Matrix r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = BiPoly(1);
  return r;
}

Matrix Matrix::pow(unsigned long e) const {
  if (rows_ != cols_) throw MathError("Matrix::pow: not square");
  Matrix r = identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1UL) r = r * base;
    base = base * base;
    e >>= 1UL;
  }
  return r;
}

BiPoly det_exact(Matrix m) {
  if (m.rows() != m.cols()) throw MathError("det_exact: not square");
  const int n = m.rows();
  if (n == 0) return BiPoly(1);
  int sign = 1;
  BiPoly prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = k;
    while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return BiPoly(0);
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BiPoly t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t.exact_div(prev);
      }
    prev = m.at(k, k);
  }
  BiPoly d = m.at(n - 1, n - 1);
  return sign == 1 ? d : -d;
}

}  // namespace stripcomb
