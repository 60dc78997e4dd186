#include "catquot/linalg.hpp"

#include "catquot/error.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>

namespace catquot {

namespace {

Integer abs_value(const Integer &v) { return v < 0 ? Integer(-v) : v; }

} // namespace

std::vector<Integer> smith_invariants(IntegerMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  for (int k = 0; k < std::min(rows, cols); ++k) {
    int pr = -1, pc = -1;
    for (int r = k; r < rows && pr < 0; ++r)
      for (int c = k; c < cols; ++c)
        if (m(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0)
      break;
    m.swap_rows(k, pr);
    m.swap_cols(k, pc);

    for (bool done = false; !done;) {
      done = true;
      for (int r = k + 1; r < rows; ++r) {
        if (m(r, k) == 0)
          continue;
        const Integer q = m(r, k) / m(k, k);
        for (int c = k; c < cols; ++c)
          m(r, c) -= q * m(k, c);
        if (m(r, k) != 0) {
          m.swap_rows(k, r);
          done = false;
        }
      }
      for (int c = k + 1; c < cols; ++c) {
        if (m(k, c) == 0)
          continue;
        const Integer q = m(k, c) / m(k, k);
        for (int r = k; r < rows; ++r)
          m(r, c) -= q * m(r, k);
        if (m(k, c) != 0) {
          m.swap_cols(k, c);
          done = false;
        }
      }
      if (!done)
        continue;
      // the pivot must divide the rest of the block
      for (int r = k + 1; r < rows && done; ++r)
        for (int c = k + 1; c < cols; ++c)
          if (m(r, c) % m(k, k) != 0) {
            for (int cc = k; cc < cols; ++cc)
              m(k, cc) += m(r, cc);
            done = false;
            break;
          }
    }
    diag.push_back(abs_value(m(k, k)));
  }
  return diag;
}

std::vector<int> row_reduce(RationalMatrix &m) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0)
      continue;
    m.swap_rows(row, p);
    const Rational inv = 1 / m(row, c);
    for (int cc = c; cc < m.cols(); ++cc)
      m(row, cc) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0)
        continue;
      const Rational f = m(r, c);
      for (int cc = c; cc < m.cols(); ++cc)
        m(r, cc) -= f * m(row, cc);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

int rank(RationalMatrix m) { return static_cast<int>(row_reduce(m).size()); }

RationalMatrix null_space(const RationalMatrix &a) {
  RationalMatrix m = a;
  const std::vector<int> pivots = row_reduce(m);
  std::vector<char> is_pivot(a.cols(), 0);
  for (int p : pivots)
    is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);
  RationalMatrix basis(a.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int f = free_cols[k];
    basis(f, static_cast<int>(k)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<int>(k)) = -m(static_cast<int>(r), f);
  }
  return basis;
}

RationalMatrix solve(const RationalMatrix &a, const RationalMatrix &b) {
  RationalMatrix aug(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c)
      aug(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c)
      aug(r, a.cols() + c) = b(r, c);
  }
  const std::vector<int> pivots = row_reduce(aug);
  for (int i = 0; i < a.cols(); ++i)
    if (i >= static_cast<int>(pivots.size()) || pivots[i] != i)
      throw InternalError("solve: matrix does not have full column rank");
  if (static_cast<int>(pivots.size()) > a.cols())
    throw InternalError("solve: right-hand side outside the column space");
  RationalMatrix x(a.cols(), b.cols());
  for (int r = 0; r < a.cols(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      x(r, c) = aug(r, a.cols() + c);
  return x;
}

} // namespace catquot
