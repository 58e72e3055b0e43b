#pragma once

// Hand-rolled random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "sergeev/algebra.hpp"
#include "sergeev/exact_linalg.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline sergeev::Rational small_rational(Rng& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  sergeev::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline sergeev::Rational nonzero_rational(Rng& rng, int range = 5) {
  sergeev::Rational r;
  do r = small_rational(rng, range);
  while (r == 0);
  return r;
}

inline sergeev::linalg::SparseVector sparse_vector(Rng& rng, std::size_t dim, double density = 0.4) {
  std::bernoulli_distribution keep(density);
  std::vector<sergeev::linalg::SparseVector::Entry> entries;
  for (std::size_t i = 0; i < dim; ++i)
    if (keep(rng)) entries.push_back({i, small_rational(rng)});
  return sergeev::linalg::SparseVector::from_entries(dim, std::move(entries));
}

inline sergeev::linalg::SparseMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
  sergeev::linalg::SparseMatrix m(cols);
  for (std::size_t r = 0; r < rows; ++r) m.add_row(sparse_vector(rng, cols, density));
  return m;
}

// rows x cols matrix of rank at most r, built as a product.
inline sergeev::linalg::SparseMatrix low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  const auto left = matrix(rng, rows, r, 0.7);
  const auto right = matrix(rng, r, cols, 0.7).transpose();
  sergeev::linalg::SparseMatrix out(cols);
  for (std::size_t i = 0; i < rows; ++i) out.add_row(right.multiply(left.row(i)));
  return out;
}

inline sergeev::Element element(Rng& rng, const sergeev::Algebra& alg, int terms = 4) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(alg.dimension() - 1));
  auto e = alg.zero();
  for (int i = 0; i < terms; ++i) e.add_term(pick(rng), nonzero_rational(rng));
  return e;
}

inline sergeev::BasisId basis_id(Rng& rng, const sergeev::Algebra& alg) {
  return std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(alg.dimension() - 1))(rng);
}

}  // namespace gen
