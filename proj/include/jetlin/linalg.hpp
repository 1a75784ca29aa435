#pragma once

#include <optional>
#include <vector>

#include "jetlin/errors.hpp"
#include "jetlin/rings.hpp"

namespace jetlin {

// Dense matrix over any of the scalar rings.  Deliberately small: the jet
// algebra only needs multiplication, inversion and exact kernel extraction.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, Errc::DimensionMismatch, "negative matrix shape");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), T{});
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring_one<T>();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const T& x : a_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }

  Matrix operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch,
            "matrix addition shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch,
            "matrix subtraction shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    require(cols_ == o.rows_, Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (ring_is_zero(at(i, k))) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    require(static_cast<int>(x.size()) == cols_, Errc::DimensionMismatch,
            "matrix-vector shape mismatch");
    std::vector<T> y(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (!ring_is_zero(at(i, j))) y[i] += at(i, j) * x[j];
      }
    return y;
  }

  // Gauss-Jordan inverse; nullopt when no pivot can be inverted in the ring
  // (singular matrix, or a non-unit pivot over a non-field ring).
  std::optional<Matrix> try_inverse() const {
    if (rows_ != cols_) return std::nullopt;
    int n = rows_;
    Matrix work = *this;
    Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      std::optional<T> pinv;
      for (int r = col; r < n; ++r) {
        if (!ring_is_zero(work.at(r, col))) {
          pinv = ring_try_invert(work.at(r, col));
          if (pinv) {
            pivot = r;
            break;
          }
        }
      }
      if (pivot < 0) return std::nullopt;
      work.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      work.scale_row(col, *pinv);
      inv.scale_row(col, *pinv);
      for (int r = 0; r < n; ++r) {
        if (r == col || ring_is_zero(work.at(r, col))) continue;
        T factor = work.at(r, col);
        work.add_scaled_row(r, col, factor);
        inv.add_scaled_row(r, col, factor);
      }
    }
    return inv;
  }

  Matrix inverse() const {
    auto inv = try_inverse();
    require(inv.has_value(), Errc::SingularLinearPart, "matrix is not invertible");
    return *inv;
  }

  // A^k for k >= 0.
  Matrix pow(unsigned long k) const {
    require(rows_ == cols_, Errc::DimensionMismatch, "power of non-square matrix");
    Matrix acc = identity(rows_);
    Matrix base = *this;
    while (k) {
      if (k & 1ul) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(r1, j), at(r2, j));
  }

  void scale_row(int r, const T& factor) {
    for (int j = 0; j < cols_; ++j) at(r, j) = at(r, j) * factor;
  }

  // row r -= factor * row src
  void add_scaled_row(int r, int src, const T& factor) {
    for (int j = 0; j < cols_; ++j) at(r, j) -= factor * at(src, j);
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

// Result of exact row reduction: reduced matrix plus pivot bookkeeping.
// Columns are processed left to right; the pivot for a column is the first
// still-unused row with an invertible entry there.  Over a field this is
// plain Gauss-Jordan with full elimination above and below.
template <class T>
struct RowReduction {
  Matrix<T> reduced;
  std::vector<T> rhs;                // reduced alongside, empty if none given
  std::vector<int> pivot_row_of_col; // -1 for free columns
  std::vector<int> pivot_col_of_row; // -1 for rows never used as pivot
  std::vector<int> free_columns;     // ascending
  int rank = 0;
};

template <class T>
RowReduction<T> row_reduce(Matrix<T> m, std::vector<T> rhs = {}) {
  const int nr = m.rows(), nc = m.cols();
  bool with_rhs = !rhs.empty();
  require(!with_rhs || static_cast<int>(rhs.size()) == nr, Errc::DimensionMismatch,
          "rhs length does not match row count");
  RowReduction<T> out;
  out.pivot_row_of_col.assign(nc, -1);
  out.pivot_col_of_row.assign(nr, -1);
  std::vector<char> row_used(static_cast<size_t>(nr), 0);
  for (int col = 0; col < nc; ++col) {
    int pivot = -1;
    std::optional<T> pinv;
    for (int r = 0; r < nr; ++r) {
      if (row_used[r] || ring_is_zero(m.at(r, col))) continue;
      pinv = ring_try_invert(m.at(r, col));
      if (pinv) {
        pivot = r;
        break;
      }
      // Non-invertible nonzero entry in a non-field ring: reject rather than
      // silently misclassify the column.
      fail(Errc::NonUnitDivisor, "row reduction hit a non-unit pivot candidate");
    }
    if (pivot < 0) {
      out.free_columns.push_back(col);
      continue;
    }
    row_used[pivot] = 1;
    out.pivot_row_of_col[col] = pivot;
    out.pivot_col_of_row[pivot] = col;
    ++out.rank;
    m.scale_row(pivot, *pinv);
    if (with_rhs) rhs[pivot] = rhs[pivot] * (*pinv);
    for (int r = 0; r < nr; ++r) {
      if (r == pivot || ring_is_zero(m.at(r, col))) continue;
      T factor = m.at(r, col);
      m.add_scaled_row(r, pivot, factor);
      if (with_rhs) rhs[r] -= factor * rhs[pivot];
    }
  }
  out.reduced = std::move(m);
  out.rhs = std::move(rhs);
  return out;
}

// Canonical kernel basis from a row reduction: one vector per free column,
// ordered by free column index; entry at the free column is 1, entries at
// pivot columns are read off the reduced matrix, everything else 0.
template <class T>
std::vector<std::vector<T>> kernel_basis(const RowReduction<T>& rr) {
  const int nc = static_cast<int>(rr.pivot_row_of_col.size());
  std::vector<std::vector<T>> basis;
  basis.reserve(rr.free_columns.size());
  for (int fc : rr.free_columns) {
    std::vector<T> v(static_cast<size_t>(nc));
    v[fc] = ring_one<T>();
    for (int col = 0; col < nc; ++col) {
      int pr = rr.pivot_row_of_col[col];
      if (pr < 0) continue;
      v[col] = T{} - rr.reduced.at(pr, fc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  return kernel_basis(row_reduce(m));
}

// Rank of the column span of a set of vectors (used by tests to compare
// subspaces exactly).
template <class T>
int span_rank(const std::vector<std::vector<T>>& vectors) {
  if (vectors.empty()) return 0;
  int dim = static_cast<int>(vectors[0].size());
  Matrix<T> m(static_cast<int>(vectors.size()), dim);
  for (int i = 0; i < m.rows(); ++i) {
    require(static_cast<int>(vectors[i].size()) == dim, Errc::DimensionMismatch,
            "span vectors of unequal length");
    for (int j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
  }
  return row_reduce(std::move(m)).rank;
}

template <class T>
bool same_span(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
  std::vector<std::vector<T>> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  int ra = span_rank(a), rb = span_rank(b), rj = span_rank(joint);
  return ra == rb && rb == rj;
}

}  // namespace jetlin
