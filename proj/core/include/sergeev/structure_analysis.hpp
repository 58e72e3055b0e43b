#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sergeev/algebra.hpp"
#include "sergeev/combinatorics.hpp"
#include "sergeev/exact_linalg.hpp"
#include "sergeev/report.hpp"

namespace sergeev {

/// Even part of the span of all (super)commutators, kept as an echelon basis
/// over the full PBW coordinate space.
class CommutatorSpace {
 public:
  /// Rows [a, g] (or graded brackets) for a in the basis and g a generator,
  /// restricted to homogeneous pairs of even total parity.
  CommutatorSpace(Algebra& alg, bool graded);

  /// Oracle: rows [u, v] over all basis pairs of even total parity.
  static CommutatorSpace all_pairs(Algebra& alg, bool graded);

  bool graded() const { return graded_; }
  std::size_t rank() const { return reducer_.rank(); }
  std::size_t even_dimension() const { return even_dimension_; }
  /// dim A_0 minus the rank: the rank of the even (super)cocenter.
  std::size_t quotient_rank() const { return even_dimension_ - rank(); }
  std::size_t rows_generated() const { return rows_generated_; }
  const linalg::RowReducer& reducer() const { return reducer_; }

 private:
  CommutatorSpace(std::size_t dimension, bool graded);

  bool graded_;
  std::size_t even_dimension_ = 0;
  std::size_t rows_generated_ = 0;
  linalg::RowReducer reducer_;
};

std::size_t even_dimension(const AlgebraContext& ctx);

std::size_t even_commutator_rank(Algebra& alg, bool graded);
std::size_t even_commutator_rank_all_pairs(Algebra& alg, bool graded);

std::size_t cocenter_rank(Algebra& alg);
std::size_t supercocenter_rank(Algebra& alg);

/// dim { z in A_0 : z g = g z for every generator g }, by rank-nullity on the
/// stacked maps z -> ([z, g])_g.
std::size_t center_even_rank(Algebra& alg);
/// Explicit kernel basis of the same maps (small algebras).
std::vector<Element> center_even_basis(Algebra& alg);

/// w_beta for beta in the tilde set (w_beta^cl with its Clifford mask for the
/// hat set), evaluated with s0 -> x1.
std::vector<Element> class_elements(Algebra& alg, LabelSet which);

/// tilde: the w_beta are independent modulo even commutators and together
/// with them span A_0. hat: the w_beta^cl span A_0 modulo graded commutators;
/// independence is reported only.
VerificationReport verify_class_basis(Algebra& alg, LabelSet which, const CommutatorSpace& space);

/// s1 x1^a s1 x1^b - x1^b s1 x1^a s1 against the closed sum, 1 <= a <= a_max, 1 <= b <= b_max.
VerificationReport check_weak_braid(Algebra& alg, int a_max, int b_max);

/// Each defining relation, applied as an operator to every basis element.
VerificationReport check_defining_relations(Algebra& alg);
/// g(x_1) annihilates every basis element.
VerificationReport check_cyclotomic_relation(Algebra& alg);
/// Straightening of s_i x_i^a and s_i x_{i+1}^a for 1 <= a <= a_max.
VerificationReport check_power_straightening(Algebra& alg, int a_max);
/// Every reduced word of every permutation evaluates to the same basis element.
VerificationReport check_reduced_words(Algebra& alg);
VerificationReport check_associativity(Algebra& alg, int samples, std::uint64_t seed);
/// With integer coefficients all structure constants seen so far are integers.
VerificationReport check_integrality(Algebra& alg);

/// All reduced words of a permutation, as lists of s-indices.
std::vector<std::vector<int>> all_reduced_words(const AlgebraContext& ctx, std::uint32_t w);

struct VerifyOptions {
  std::size_t budget = 10000;             // above this only whitelisted rank checks run
  std::size_t all_pairs_limit = 500;      // generator-partner vs all-pairs oracle
  std::size_t exhaustive_limit = 1296;    // trace symmetry and Gram determinant
  std::size_t theta_limit = 400;          // theta tower checks
  std::size_t traceform_limit = 64;       // even trace form space (all products formed)
  std::size_t center_kernel_limit = 128;  // explicit center basis cross-check
  int associativity_samples = 100;
  int bilinear_samples = 100;
  std::uint64_t seed = 1;
  std::string sample = "x^d";
  bool ranks_only = false;
};

struct VerifyResult {
  std::vector<VerificationReport> reports;
  RankTable ranks;
  bool budget_exceeded = false;

  bool any_failure() const;
};

/// Runs every check that fits the options on one parameter point.
VerifyResult verify_all(Algebra& alg, const VerifyOptions& options);

}  // namespace sergeev
