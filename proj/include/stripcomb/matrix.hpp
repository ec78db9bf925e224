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

#include <optional>
#include <vector>

#include "stripcomb/bipoly.hpp"
#include "stripcomb/fracfield.hpp"

namespace stripcomb {

// Row-major matrix with exact polynomial entries.
class Matrix {
 public:
  Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BiPoly& at(int r, int c);
  const BiPoly& at(int r, int c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix pow(unsigned long e) const;  // square matrices only
  static Matrix identity(int n);

 private:
  int rows_, cols_;
  std::vector<BiPoly> e_;
};

// Determinant by fraction-free elimination; stays in polynomial
// arithmetic, every interior division is exact.
BiPoly det_exact(Matrix m);

enum class SolveStatus { kOk, kNoSolution, kUnderdetermined };

template <typename F>
struct LinearSolution {
  SolveStatus status = SolveStatus::kNoSolution;
  std::vector<F> x;
};

// Gaussian elimination over an exact field (Rational or FracPoly).
// a is rows x cols, rhs has one entry per row; a unique solution is
// required for kOk.
template <typename F>
LinearSolution<F> solve_linear_field(std::vector<std::vector<F>> a,
                                     std::vector<F> rhs) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw MathError("solve_linear_field: ragged rows");
  if (rhs.size() != rows) throw MathError("solve_linear_field: rhs size");

  std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && field_is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    std::swap(rhs[p], rhs[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || field_is_zero(a[r][c])) continue;
      F factor = a[r][c] / a[rank][c];
      for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] - factor * a[rank][j];
      rhs[r] = rhs[r] - factor * rhs[rank];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }

  LinearSolution<F> out;
  for (size_t r = rank; r < rows; ++r)
    if (!field_is_zero(rhs[r])) {
      out.status = SolveStatus::kNoSolution;
      return out;
    }
  if (rank < cols) {
    out.status = SolveStatus::kUnderdetermined;
    return out;
  }
  out.status = SolveStatus::kOk;
  out.x.assign(cols, F());
  for (size_t c = 0; c < cols; ++c) {
    size_t r = pivot_of_col[c];
    out.x[c] = rhs[r] / a[r][c];
  }
  return out;
}

}  // namespace stripcomb
