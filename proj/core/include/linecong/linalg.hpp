#pragma once

#include <vector>

#include "linecong/ring.hpp"

namespace linecong {

/// Dense row-major matrix over the coefficient field; just enough linear
/// algebra for graded ranks, Jacobian ranks and point solving.
template <class F>
class DenseMat {
 public:
  using C = typename F::Elem;

  DenseMat(const F& fld, int rows, int cols)
      : fld_(fld), rows_(rows), cols_(cols), a_(size_t(rows) * cols, fld.zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  C& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const C& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  /// Row-reduce in place; returns the rank. Pivot columns are recorded.
  int row_reduce() {
    pivots_.clear();
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
      int piv = -1;
      for (int i = rank; i < rows_; ++i)
        if (!F::is_zero(at(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      swap_rows(piv, rank);
      C inv = fld_.inv(at(rank, col));
      for (int j = col; j < cols_; ++j) at(rank, j) = fld_.mul(at(rank, j), inv);
      for (int i = 0; i < rows_; ++i) {
        if (i == rank || F::is_zero(at(i, col))) continue;
        C f = at(i, col);
        for (int j = col; j < cols_; ++j) at(i, j) = fld_.sub(at(i, j), fld_.mul(f, at(rank, j)));
      }
      pivots_.push_back(col);
      ++rank;
    }
    return rank;
  }

  int rank() const {
    DenseMat copy(*this);
    return copy.row_reduce();
  }

  const std::vector<int>& pivot_columns() const { return pivots_; }

  /// Basis of the right kernel (each vector has cols() entries). Requires a
  /// prior row_reduce().
  std::vector<std::vector<C>> kernel_basis() const {
    std::vector<bool> is_piv(cols_, false);
    std::vector<int> piv_row(cols_, -1);
    for (size_t k = 0; k < pivots_.size(); ++k) {
      is_piv[pivots_[k]] = true;
      piv_row[pivots_[k]] = int(k);
    }
    std::vector<std::vector<C>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_piv[free]) continue;
      std::vector<C> v(cols_, fld_.zero());
      v[free] = fld_.one();
      for (int col = 0; col < cols_; ++col)
        if (is_piv[col]) v[col] = fld_.neg(at(piv_row[col], free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  F fld_;
  int rows_, cols_;
  std::vector<C> a_;
  std::vector<int> pivots_;
};

/// Rank of a sparse matrix given as rows of (column, value) pairs sorted by
/// column; Gaussian elimination with persistent pivot rows.
template <class F>
int sparse_rank(const F& fld, int ncols, std::vector<std::vector<std::pair<int, typename F::Elem>>> rows) {
  using C = typename F::Elem;
  using Row = std::vector<std::pair<int, C>>;
  std::vector<int> pivot_of(ncols, -1);
  std::vector<Row> pivots;
  auto axpy = [&](const Row& a, const Row& b, C factor) {
    // a - factor * b
    Row out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first) {
        out.push_back(a[i++]);
      } else if (a[i].first > b[j].first) {
        C v = fld.neg(fld.mul(factor, b[j].second));
        if (!F::is_zero(v)) out.push_back({b[j].first, v});
        ++j;
      } else {
        C v = fld.sub(a[i].second, fld.mul(factor, b[j].second));
        if (!F::is_zero(v)) out.push_back({a[i].first, v});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      C v = fld.neg(fld.mul(factor, b[j].second));
      if (!F::is_zero(v)) out.push_back({b[j].first, v});
    }
    return out;
  };
  int rank = 0;
  for (auto& row : rows) {
    Row cur = std::move(row);
    while (!cur.empty()) {
      int lead = cur.front().first;
      int p = pivot_of[lead];
      if (p < 0) {
        C inv = fld.inv(cur.front().second);
        for (auto& [c, v] : cur) v = fld.mul(v, inv);
        pivot_of[lead] = int(pivots.size());
        pivots.push_back(std::move(cur));
        ++rank;
        break;
      }
      cur = axpy(cur, pivots[p], cur.front().second);
    }
  }
  return rank;
}

}  // namespace linecong
