#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sergeev/rational.hpp"

/// Exact sparse linear algebra over the rationals: rank, square solves,
/// kernels and determinants. Every routine pivots on the first nonzero
/// column index, so results (and intermediate bases) are reproducible.
namespace sergeev::linalg {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sparse vector with sorted, nonzero entries.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dimension) : dimension_(dimension) {}

  /// Builds from (index, value) pairs in any order; duplicates are summed and
  /// zeros dropped.
  static SparseVector from_entries(std::size_t dimension, std::vector<Entry> entries);
  static SparseVector from_dense(std::span<const Rational> values);
  static SparseVector unit(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return dimension_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Index of the first nonzero entry; requires !is_zero().
  std::size_t lead() const { return entries_.front().first; }
  const Rational& lead_value() const { return entries_.front().second; }

  Rational at(std::size_t index) const;
  void set(std::size_t index, const Rational& value);

  /// this += factor * other.
  void add_scaled(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);

  Rational dot(const SparseVector& other) const;
  std::vector<Rational> to_dense() const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dimension_ == b.dimension_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<Entry> entries_;
};

/// Row-major sparse matrix. All rows share the column dimension.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t cols) : cols_(cols) {}
  SparseMatrix(std::size_t cols, std::vector<SparseVector> rows);

  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static SparseMatrix identity(std::size_t size);

  void add_row(SparseVector row);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_.size() == cols_; }
  const SparseVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseVector>& row_vectors() const { return rows_; }

  Rational at(std::size_t r, std::size_t c) const { return rows_[r].at(c); }
  SparseVector multiply(const SparseVector& x) const;
  SparseMatrix transpose() const;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

/// Incremental echelon basis. Rows are streamed in; rows that reduce to zero
/// are discarded. Stored rows have pivot coefficient 1 and pairwise distinct
/// leading indices.
class RowReducer {
 public:
  explicit RowReducer(std::size_t dimension);

  /// Returns true when the row was independent of everything added so far.
  bool add(SparseVector row);

  /// Reduces a copy of the row against the current basis.
  SparseVector reduce(SparseVector row) const;
  bool in_span(const SparseVector& row) const { return reduce(row).is_zero(); }

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }

 private:
  void reduce_in_place(SparseVector& row) const;

  std::size_t dimension_;
  std::vector<SparseVector> basis_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> index into basis_, or -1
};

/// Dimension of the span. Throws DimensionError on mixed row dimensions.
std::size_t rank(std::span<const SparseVector> rows);
std::size_t rank(const SparseMatrix& matrix);

/// Exact solve of M x = rhs for square invertible M.
SparseVector solve_square(const SparseMatrix& matrix, const SparseVector& rhs);

/// Basis of {x : M x = 0}; size is cols - rank.
std::vector<SparseVector> kernel_basis(const SparseMatrix& matrix);

Rational determinant(const SparseMatrix& matrix);

/// Gauss-Jordan factorization of a square invertible matrix, kept for
/// repeated solves against many right-hand sides.
class SquareSolver {
 public:
  explicit SquareSolver(const SparseMatrix& matrix);

  std::size_t size() const { return inverse_rows_.size(); }
  SparseVector solve(const SparseVector& rhs) const;

  /// Row i of the inverse, i.e. the functional rhs -> x_i.
  const SparseVector& inverse_row(std::size_t i) const { return inverse_rows_[i]; }

 private:
  std::vector<SparseVector> inverse_rows_;
};

}  // namespace sergeev::linalg
