#pragma once

#include "catquot/numeric.hpp"

#include <cstddef>
#include <vector>

namespace catquot {

/// Dense row-major matrix.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  T &operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const T &operator()(int r, int c) const {
    return data_[std::size_t(r) * cols_ + c];
  }

  void swap_rows(int a, int b) {
    for (int c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(int a, int b) {
    for (int r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Nonzero invariant factors d_1 | d_2 | ... (all positive) of an integer
/// matrix, via unimodular row and column operations. The pivot at each step
/// is the first nonzero entry of the remaining block in row-major order.
std::vector<Integer> smith_invariants(IntegerMatrix m);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<int> row_reduce(RationalMatrix &m);

int rank(RationalMatrix m);

/// Basis of the null space, one column per basis vector.
RationalMatrix null_space(const RationalMatrix &m);

/// Solves a * x = b for every column of b. `a` must have full column rank and
/// each column of b must lie in its column space; InternalError otherwise.
RationalMatrix solve(const RationalMatrix &a, const RationalMatrix &b);

} // namespace catquot
