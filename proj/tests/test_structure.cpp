#include <gtest/gtest.h>

#include "generators.hpp"
#include "sergeev/combinatorics.hpp"
#include "sergeev/structure_analysis.hpp"

using namespace sergeev;

namespace {

Algebra make(int n, int d, AlgebraContext::CoefficientMap coeffs = {}) {
  return Algebra(AlgebraContext::create(n, d, std::move(coeffs)));
}

}  // namespace

TEST(Ranks, CocenterKnownValues) {
  const std::vector<std::tuple<int, int, std::size_t>> known = {{1, 2, 1}, {2, 1, 1}, {2, 2, 2}, {2, 3, 4}};
  for (auto [n, d, expected] : known) {
    Algebra alg = make(n, d);
    EXPECT_EQ(cocenter_rank(alg), expected) << n << "," << d;
  }
}

TEST(Ranks, CenterAndSupercocenterKnownValues) {
  Algebra a21 = make(2, 1), a31 = make(3, 1), a23 = make(2, 3), a12 = make(1, 2);
  EXPECT_EQ(center_even_rank(a21), 1u);
  EXPECT_EQ(center_even_rank(a31), 2u);
  EXPECT_EQ(center_even_rank(a23), 4u);
  EXPECT_EQ(supercocenter_rank(a21), 0u);
  EXPECT_EQ(supercocenter_rank(a31), 1u);
  EXPECT_EQ(supercocenter_rank(a12), 1u);
}

TEST(Ranks, GeneratorPartnersMatchAllPairs) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}) {
    Algebra alg = make(n, d);
    for (bool graded : {false, true})
      EXPECT_EQ(even_commutator_rank(alg, graded), even_commutator_rank_all_pairs(alg, graded)) << n << "," << d;
  }
}

TEST(Center, KernelElementsCommuteWithEverything) {
  Algebra alg = make(2, 2, {{0, Rational(-1)}});
  const auto basis = center_even_basis(alg);
  EXPECT_EQ(basis.size(), center_even_rank(alg));
  for (const auto& z : basis) {
    EXPECT_EQ(alg.parity(z), 0);
    for (BasisId b = 0; b < alg.dimension(); ++b)
      EXPECT_EQ(alg.multiply(z, alg.basis(b)), alg.multiply(alg.basis(b), z));
  }
}

TEST(Center, DualityWithCocenters) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {1, 4}}) {
    Algebra alg = make(n, d);
    const std::size_t center = center_even_rank(alg);
    EXPECT_EQ(center, d % 2 ? cocenter_rank(alg) : supercocenter_rank(alg)) << n << "," << d;
  }
}

TEST(ClassBasis, TildeAndHat) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 1}}) {
    Algebra alg = make(n, d);
    CommutatorSpace ungraded(alg, false), graded(alg, true);
    EXPECT_FALSE(verify_class_basis(alg, LabelSet::Tilde, ungraded).failed());
    EXPECT_FALSE(verify_class_basis(alg, LabelSet::Hat, graded).failed());
    for (const auto& e : class_elements(alg, LabelSet::Hat)) EXPECT_EQ(alg.parity(e), 0);
  }
}

TEST(Relations, AllChecksPassOnSmallGrid) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 1}}) {
    Algebra alg = make(n, d, d % 2 == 0 ? AlgebraContext::CoefficientMap{{0, Rational(1, 2)}} : AlgebraContext::CoefficientMap{});
    EXPECT_FALSE(check_defining_relations(alg).failed());
    EXPECT_FALSE(check_cyclotomic_relation(alg).failed());
    EXPECT_FALSE(check_power_straightening(alg, d + 1).failed());
    if (n >= 2) EXPECT_FALSE(check_weak_braid(alg, d, d).failed());
    EXPECT_FALSE(check_reduced_words(alg).failed());
    EXPECT_FALSE(check_associativity(alg, 30, 3).failed());
  }
}

TEST(ReducedWords, CountsForLongestElement) {
  Algebra alg = make(3, 1);
  const auto& ctx = alg.context();
  const auto longest = ctx.perm_rank({3, 2, 1});
  EXPECT_EQ(all_reduced_words(ctx, longest).size(), 2u);
  Algebra alg4 = make(4, 1);
  EXPECT_EQ(all_reduced_words(alg4.context(), alg4.context().perm_rank({4, 3, 2, 1})).size(), 16u);
}

TEST(Verify, BudgetSkipsInsteadOfFailing) {
  Algebra alg = make(2, 2);
  VerifyOptions opts;
  opts.budget = 10;
  const auto res = verify_all(alg, opts);
  EXPECT_TRUE(res.budget_exceeded);
  EXPECT_FALSE(res.any_failure());
  bool cocenter = false;
  for (const auto& r : res.reports) cocenter |= r.check == "cocenter_rank" && r.status == Status::Pass;
  EXPECT_TRUE(cocenter);
}

TEST(Verify, FullRunPassesAndIsDeterministic) {
  Algebra a = make(2, 2), b = make(2, 2);
  VerifyOptions opts;
  const auto ra = verify_all(a, opts), rb = verify_all(b, opts);
  EXPECT_FALSE(ra.any_failure());
  ASSERT_EQ(ra.reports.size(), rb.reports.size());
  for (std::size_t i = 0; i < ra.reports.size(); ++i)
    EXPECT_EQ(to_json(ra.reports[i], false), to_json(rb.reports[i], false));
}
