#pragma once

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "sergeev/algebra.hpp"
#include "sergeev/exact_linalg.hpp"
#include "sergeev/report.hpp"

namespace sergeev {

/// Coordinate vector of e in the basis of alg.
linalg::SparseVector coordinates(const Algebra& alg, const Element& e);
Element from_coordinates(const Algebra& alg, const linalg::SparseVector& v);

/// Coefficient of x_1^{d-1} ... x_n^{d-1} (no Clifford part, identity permutation).
Rational trace(const AlgebraContext& ctx, const Element& e);

/// Embedding H_n -> H_{n+1}: pads alpha with 0 and fixes n+1.
BasisId embed_id(const AlgebraContext& small, const AlgebraContext& big, BasisId b);
Element embed(const Algebra& small, const Algebra& big, const Element& e);

/// Coordinates of H_{n+1} as a free right H_n-module on the basis
/// x_j^a c_j^b s_j ... s_n (1 <= j <= n+1, 0 <= a < d, b in {0,1}).
class ThetaSolver {
 public:
  /// big must have rank small.n() + 1 and the same level and coefficients.
  ThetaSolver(Algebra& small, Algebra& big);

  Algebra& small() const { return *small_; }
  Algebra& big() const { return *big_; }

  /// The H_n coefficient of y at the free generator (j, a, b).
  Element coordinate(const Element& y, int j, int a, int b) const;
  /// Coordinate at (n+1, d-1, 0).
  Element project(const Element& y) const;

 private:
  std::size_t column(int j, int a, int b, BasisId h) const;

  Algebra* small_;
  Algebra* big_;
  std::unique_ptr<linalg::SquareSolver> solver_;
};

/// Chain of projections H_n -> H_{n-1} -> ... -> H_0 = R built on top of an
/// existing algebra. Lower ranks get their own Algebra instances.
class ThetaTower {
 public:
  explicit ThetaTower(Algebra& top);

  int rank() const { return static_cast<int>(levels_.size()) - 1; }
  Algebra& algebra(int k) const;
  /// theta_k : H_k -> H_{k-1}, 1 <= k <= rank().
  const ThetaSolver& solver(int k) const { return *solvers_.at(k - 1); }

  /// theta_1 o ... o theta_n applied to an element of the top algebra.
  Rational trace(const Element& e) const;
  /// Same starting from level k.
  Rational trace_from(int k, const Element& e) const;

 private:
  Algebra* top_;
  std::vector<std::unique_ptr<Algebra>> owned_;
  std::vector<Algebra*> levels_;  // index k -> H_k
  std::vector<std::unique_ptr<ThetaSolver>> solvers_;
};

/// Rows T[u] with T[u][v] = t(u v) for all basis pairs, computed by
/// propagating the functional v -> t(u v) along u = p g.
class PairTable {
 public:
  explicit PairTable(Algebra& alg);

  std::size_t dimension() const { return rows_.size(); }
  const linalg::SparseVector& row(BasisId u) const { return rows_[u]; }
  Rational at(BasisId u, BasisId v) const { return rows_[u].at(v); }
  linalg::SparseMatrix matrix() const;

 private:
  std::vector<linalg::SparseVector> rows_;
};

/// t(uv) = (-1)^{(d-1)|u||v|} t(vu) over every ordered basis pair.
VerificationReport check_trace_symmetry(Algebra& alg, const PairTable& table);
VerificationReport check_trace_symmetry(Algebra& alg);
/// t vanishes on odd basis elements.
VerificationReport check_trace_even(Algebra& alg);

/// G[u][v] = t(u v) in the context's basis order.
linalg::SparseMatrix gram_matrix(Algebra& alg);
/// G[i][j] = t(e_i e_j) for arbitrary elements.
linalg::SparseMatrix gram_of_elements(Algebra& alg, const std::vector<Element>& elements);
Rational gram_determinant(Algebra& alg);

struct TraceFormSpace {
  std::size_t dimension = 0;      // of the space of even symmetric functionals
  std::size_t max_gram_rank = 0;  // over kernel basis and random combinations
  std::size_t algebra_dimension = 0;
};

/// Even functionals tr with tr([A, A]) = 0, and the largest Gram rank found.
/// Products of all basis pairs are formed, so only small algebras are feasible.
TraceFormSpace even_traceform_space(Algebra& alg, std::uint64_t seed = 1, int random_combinations = 16);

/// trace_via_theta against the closed formula on every basis element.
VerificationReport check_theta_trace(Algebra& alg, const ThetaTower& tower);
/// theta_{k+1}(s_k x s_k) = iota(theta_k(x)) for every basis element x of H_k.
VerificationReport check_theta_conjugation(const ThetaTower& tower, int k);
/// theta(h y h') = h theta(y) h' on random samples.
VerificationReport check_theta_bilinear(const ThetaTower& tower, int k, int samples, std::uint64_t seed);
/// s_n ... s_i x_i^a c_i^b s_i ... s_n has leading free coordinate x_{n+1}^a c_{n+1}^b
/// and no coordinates at x_{n+1}^k c_{n+1}^e for k >= a - 1 otherwise (a < d).
VerificationReport check_conjugated_powers(const ThetaSolver& solver);

}  // namespace sergeev
