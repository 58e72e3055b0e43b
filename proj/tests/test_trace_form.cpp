#include <gtest/gtest.h>

#include "generators.hpp"
#include "sergeev/combinatorics.hpp"
#include "sergeev/exact_linalg.hpp"
#include "sergeev/trace_form.hpp"

using namespace sergeev;

namespace {

Algebra make(int n, int d, AlgebraContext::CoefficientMap coeffs = {}) {
  return Algebra(AlgebraContext::create(n, d, std::move(coeffs)));
}

Element word(Algebra& alg, const std::string& w) { return alg.evaluate(parse_word(w)); }

}  // namespace

TEST(Trace, ClosedFormExamples) {
  Algebra a = make(1, 2);
  EXPECT_EQ(trace(a.context(), word(a, "x1")), 1);
  EXPECT_EQ(trace(a.context(), a.one()), 0);
  EXPECT_EQ(trace(a.context(), word(a, "c1")), 0);
  Algebra b = make(2, 2);
  EXPECT_EQ(trace(b.context(), word(b, "x1 x2")), 1);
  EXPECT_EQ(trace(b.context(), word(b, "x1 x2 s1")), 0);
}

TEST(Theta, BaseProjections) {
  Algebra a = make(1, 4, {{0, Rational(7)}, {2, Rational(-5, 3)}});
  ThetaTower tower(a);
  const auto& theta = tower.solver(1);
  auto value = [&](const std::string& w) { return theta.project(word(a, w)).coefficient(0); };
  EXPECT_EQ(value("x1^3"), 1);
  EXPECT_EQ(value("x1^4"), 0);
  EXPECT_EQ(value("x1^5"), Rational(5, 3));
  EXPECT_EQ(value("c1 x1^3"), 0);
}

TEST(Theta, TowerExamples) {
  Algebra b = make(2, 2);
  ThetaTower tower(b);
  EXPECT_EQ(tower.trace(word(b, "x1 x2")), 1);
  Algebra a = make(1, 2);
  ThetaTower t1(a);
  EXPECT_EQ(t1.trace(word(a, "c1")), 0);
}

TEST(Theta, AgreesWithClosedFormAndConjugation) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 2}, {2, 3}}) {
    Algebra alg = make(n, d);
    ThetaTower tower(alg);
    EXPECT_FALSE(check_theta_trace(alg, tower).failed());
    for (int k = 1; k < n; ++k) EXPECT_FALSE(check_theta_conjugation(tower, k).failed());
    for (int k = 1; k <= n; ++k) EXPECT_FALSE(check_theta_bilinear(tower, k, 30, 5).failed());
    EXPECT_FALSE(check_conjugated_powers(tower.solver(n)).failed());
  }
}

TEST(Embedding, IsMultiplicative) {
  gen::Rng rng(31);
  Algebra small = make(2, 2), big = make(3, 2);
  for (int t = 0; t < 50; ++t) {
    const auto u = gen::element(rng, small), v = gen::element(rng, small);
    EXPECT_EQ(embed(small, big, small.multiply(u, v)), big.multiply(embed(small, big, u), embed(small, big, v)));
  }
}

TEST(PairTable, MatchesDirectProducts) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {1, 4}}) {
    Algebra alg = make(n, d, d % 2 == 0 ? AlgebraContext::CoefficientMap{{0, Rational(2)}} : AlgebraContext::CoefficientMap{});
    const PairTable table(alg);
    ASSERT_EQ(table.dimension(), alg.dimension());
    for (BasisId u = 0; u < alg.dimension(); ++u)
      for (BasisId v = 0; v < alg.dimension(); ++v)
        EXPECT_EQ(table.at(u, v), trace(alg.context(), alg.multiply(alg.basis(u), alg.basis(v))));
  }
}

TEST(TraceProperty, SupersymmetryOnRandomPairs) {
  gen::Rng rng(32);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 1}}) {
    Algebra alg = make(n, d);
    const auto& ctx = alg.context();
    for (int t = 0; t < 150; ++t) {
      const BasisId u = gen::basis_id(rng, alg), v = gen::basis_id(rng, alg);
      const int sign = ((d - 1) * ctx.parity(u) * ctx.parity(v)) % 2 ? -1 : 1;
      EXPECT_EQ(trace(ctx, alg.multiply(alg.basis(u), alg.basis(v))),
                sign * trace(ctx, alg.multiply(alg.basis(v), alg.basis(u))));
    }
  }
}

TEST(TraceSymmetry, ExhaustiveSmall) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    Algebra alg = make(n, d);
    const auto r = check_trace_symmetry(alg);
    EXPECT_FALSE(r.failed());
    EXPECT_EQ(r.cases_tested, alg.dimension() * alg.dimension());
    EXPECT_FALSE(check_trace_even(alg).failed());
  }
}

TEST(Gram, RankOneExamples) {
  Algebra a = make(1, 2);
  std::vector<Element> b;
  for (const char* w : {"", "x1", "c1", "c1 x1"}) b.push_back(word(a, w));
  const auto g = gram_of_elements(a, b);
  const auto expected = linalg::SparseMatrix::from_dense({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(g.at(r, c), expected.at(r, c)) << r << "," << c;
  EXPECT_EQ(linalg::determinant(g), -1);
  Algebra one = make(1, 1);
  EXPECT_EQ(gram_determinant(one), 1);
}

TEST(Gram, SignedPowerOfTwoWithIntegerCoefficients) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {1, 4}, {2, 3}}) {
    Algebra alg = make(n, d, d % 2 == 0 ? AlgebraContext::CoefficientMap{{0, Rational(3)}} : AlgebraContext::CoefficientMap{});
    const Rational det = gram_determinant(alg);
    EXPECT_NE(det, 0);
    EXPECT_GE(power_of_two_exponent(det), 0) << to_string(det);
  }
}

TEST(Gram, EvenOddBlocksVanish) {
  Algebra alg = make(2, 2);
  const auto g = gram_matrix(alg);
  const auto& ctx = alg.context();
  for (BasisId u = 0; u < alg.dimension(); ++u)
    for (const auto& [v, value] : g.row(u).entries()) EXPECT_EQ(ctx.parity(u), ctx.parity(static_cast<BasisId>(v)));
}

TEST(TraceForms, EvenLevelCounterexample) {
  Algebra a = make(1, 2);
  const auto s = even_traceform_space(a);
  EXPECT_GE(s.dimension, 1u);
  EXPECT_LT(s.max_gram_rank, 4u);
}

TEST(TraceForms, OddLevelAdmitsNondegenerateForm) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}}) {
    Algebra a = make(n, d);
    const auto s = even_traceform_space(a);
    EXPECT_EQ(s.max_gram_rank, a.dimension());
  }
}
