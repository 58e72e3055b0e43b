#include "sergeev/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace sergeev::linalg {

namespace {

bool entry_less(const SparseVector::Entry& e, std::size_t index) { return e.first < index; }

void require_same_dimension(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw DimensionError("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                         std::to_string(got));
}

// Sorts rows by leading index and clears every pivot column above its pivot,
// turning an echelon basis with unit pivots into reduced row echelon form.
std::vector<SparseVector> reduced_echelon(std::vector<SparseVector> basis) {
  std::sort(basis.begin(), basis.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.lead() < b.lead(); });
  for (std::size_t i = basis.size(); i-- > 0;) {
    const std::size_t col = basis[i].lead();
    for (std::size_t j = 0; j < i; ++j) {
      Rational factor = basis[j].at(col);
      if (factor != 0) basis[j].add_scaled(-factor, basis[i]);
    }
  }
  return basis;
}

}  // namespace

// ---------------------------------------------------------------------------
// SparseVector

SparseVector SparseVector::from_entries(std::size_t dimension, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v(dimension);
  for (auto& [index, value] : entries) {
    if (index >= dimension)
      throw DimensionError("index " + std::to_string(index) + " outside dimension " +
                           std::to_string(dimension));
    if (!v.entries_.empty() && v.entries_.back().first == index) {
      v.entries_.back().second += value;
      if (v.entries_.back().second == 0) v.entries_.pop_back();
    } else if (value != 0) {
      v.entries_.emplace_back(index, std::move(value));
    }
  }
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
  SparseVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) v.entries_.emplace_back(i, values[i]);
  return v;
}

SparseVector SparseVector::unit(std::size_t dimension, std::size_t index) {
  SparseVector v(dimension);
  v.set(index, 1);
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index, entry_less);
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::set(std::size_t index, const Rational& value) {
  if (index >= dimension_)
    throw DimensionError("index " + std::to_string(index) + " outside dimension " +
                         std::to_string(dimension_));
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index, entry_less);
  const bool present = it != entries_.end() && it->first == index;
  if (value == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    entries_.emplace(it, index, value);
  }
}

void SparseVector::add_scaled(const Rational& factor, const SparseVector& other) {
  require_same_dimension(dimension_, other.dimension_);
  if (factor == 0 || other.entries_.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

Rational SparseVector::dot(const SparseVector& other) const {
  require_same_dimension(dimension_, other.dimension_);
  Rational sum = 0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

std::vector<Rational> SparseVector::to_dense() const {
  std::vector<Rational> out(dimension_, Rational(0));
  for (const auto& [i, v] : entries_) out[i] = v;
  return out;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t cols, std::vector<SparseVector> rows) : cols_(cols) {
  for (const auto& r : rows) require_same_dimension(cols_, r.dimension());
  rows_ = std::move(rows);
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(cols);
  for (const auto& r : rows) {
    require_same_dimension(cols, r.size());
    m.rows_.push_back(SparseVector::from_dense(r));
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t size) {
  SparseMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.rows_.push_back(SparseVector::unit(size, i));
  return m;
}

void SparseMatrix::add_row(SparseVector row) {
  require_same_dimension(cols_, row.dimension());
  rows_.push_back(std::move(row));
}

SparseVector SparseMatrix::multiply(const SparseVector& x) const {
  require_same_dimension(cols_, x.dimension());
  SparseVector out(rows_.size());
  std::vector<SparseVector::Entry> entries;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational v = rows_[i].dot(x);
    if (v != 0) entries.emplace_back(i, std::move(v));
  }
  return SparseVector::from_entries(rows_.size(), std::move(entries));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> cols(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r].entries()) cols[c].emplace_back(r, v);
  SparseMatrix t(rows_.size());
  for (auto& entries : cols) t.rows_.push_back(SparseVector::from_entries(rows_.size(), std::move(entries)));
  return t;
}

// ---------------------------------------------------------------------------
// RowReducer

RowReducer::RowReducer(std::size_t dimension) : dimension_(dimension), pivot_row_(dimension, -1) {}

void RowReducer::reduce_in_place(SparseVector& row) const {
  while (!row.is_zero()) {
    const std::ptrdiff_t p = pivot_row_[row.lead()];
    if (p < 0) return;
    Rational factor = -row.lead_value();
    row.add_scaled(factor, basis_[static_cast<std::size_t>(p)]);
  }
}

SparseVector RowReducer::reduce(SparseVector row) const {
  require_same_dimension(dimension_, row.dimension());
  reduce_in_place(row);
  return row;
}

bool RowReducer::add(SparseVector row) {
  require_same_dimension(dimension_, row.dimension());
  reduce_in_place(row);
  if (row.is_zero()) return false;
  Rational inv = 1 / row.lead_value();
  row.scale(inv);
  pivot_row_[row.lead()] = static_cast<std::ptrdiff_t>(basis_.size());
  basis_.push_back(std::move(row));
  return true;
}

// ---------------------------------------------------------------------------
// Free functions

std::size_t rank(std::span<const SparseVector> rows) {
  if (rows.empty()) return 0;
  RowReducer reducer(rows.front().dimension());
  for (const auto& r : rows) reducer.add(r);
  return reducer.rank();
}

std::size_t rank(const SparseMatrix& matrix) {
  RowReducer reducer(matrix.cols());
  for (const auto& r : matrix.row_vectors()) reducer.add(r);
  return reducer.rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& matrix) {
  const std::size_t n = matrix.cols();
  RowReducer reducer(n);
  for (const auto& r : matrix.row_vectors()) reducer.add(r);
  std::vector<SparseVector> rref = reduced_echelon(reducer.basis());

  std::vector<bool> is_pivot(n, false);
  for (const auto& r : rref) is_pivot[r.lead()] = true;

  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<SparseVector::Entry> entries;
    entries.emplace_back(f, Rational(1));
    for (const auto& r : rref) {
      Rational v = r.at(f);
      if (v != 0) entries.emplace_back(r.lead(), -v);
    }
    kernel.push_back(SparseVector::from_entries(n, std::move(entries)));
  }
  return kernel;
}

Rational determinant(const SparseMatrix& matrix) {
  if (!matrix.is_square())
    throw DimensionError("determinant of a " + std::to_string(matrix.rows()) + "x" +
                         std::to_string(matrix.cols()) + " matrix");
  const std::size_t n = matrix.cols();
  if (n == 0) return 1;

  std::vector<SparseVector> rows = matrix.row_vectors();
  std::vector<std::set<std::size_t>> bucket(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].is_zero()) return 0;
    bucket[rows[i].lead()].insert(i);
  }

  Rational det = 1;
  std::vector<std::size_t> pivot_of_col(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (bucket[c].empty()) return 0;
    const std::size_t p = *bucket[c].begin();
    pivot_of_col[c] = p;
    const Rational pivot = rows[p].lead_value();
    det *= pivot;
    for (auto it = std::next(bucket[c].begin()); it != bucket[c].end(); ++it) {
      const std::size_t q = *it;
      Rational factor = -rows[q].lead_value() / pivot;
      rows[q].add_scaled(factor, rows[p]);
      if (rows[q].is_zero()) return 0;
      bucket[rows[q].lead()].insert(q);
    }
    bucket[c].clear();
  }

  // Sign of the permutation column -> pivot row.
  std::vector<bool> seen(n, false);
  bool odd = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = pivot_of_col[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) odd = !odd;
  }
  return odd ? Rational(-det) : det;
}

SquareSolver::SquareSolver(const SparseMatrix& matrix) {
  if (!matrix.is_square())
    throw DimensionError("solve_square needs a square matrix, got " + std::to_string(matrix.rows()) +
                         "x" + std::to_string(matrix.cols()));
  const std::size_t n = matrix.cols();
  // Augmented rows [M_i | e_i]; a pivot landing in the right half means M is singular.
  RowReducer reducer(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVector::Entry> entries(matrix.row(i).entries().begin(),
                                             matrix.row(i).entries().end());
    entries.emplace_back(n + i, Rational(1));
    reducer.add(SparseVector::from_entries(2 * n, std::move(entries)));
  }
  for (const auto& r : reducer.basis())
    if (r.lead() >= n) throw SingularMatrixError("matrix is singular");

  std::vector<SparseVector> rref = reduced_echelon(reducer.basis());
  inverse_rows_.assign(n, SparseVector(n));
  for (auto& r : rref) {
    std::vector<SparseVector::Entry> right;
    for (const auto& [c, v] : r.entries())
      if (c >= n) right.emplace_back(c - n, v);
    inverse_rows_[r.lead()] = SparseVector::from_entries(n, std::move(right));
  }
}

SparseVector SquareSolver::solve(const SparseVector& rhs) const {
  require_same_dimension(inverse_rows_.size(), rhs.dimension());
  std::vector<SparseVector::Entry> entries;
  for (std::size_t i = 0; i < inverse_rows_.size(); ++i) {
    Rational v = inverse_rows_[i].dot(rhs);
    if (v != 0) entries.emplace_back(i, std::move(v));
  }
  return SparseVector::from_entries(inverse_rows_.size(), std::move(entries));
}

SparseVector solve_square(const SparseMatrix& matrix, const SparseVector& rhs) {
  if (matrix.is_square()) require_same_dimension(matrix.rows(), rhs.dimension());
  return SquareSolver(matrix).solve(rhs);
}

}  // namespace sergeev::linalg
