#include <gtest/gtest.h>

#include "generators.hpp"
#include "sergeev/algebra.hpp"
#include "sergeev/combinatorics.hpp"

using namespace sergeev;

namespace {

Algebra make(int n, int d, AlgebraContext::CoefficientMap coeffs = {}) {
  return Algebra(AlgebraContext::create(n, d, std::move(coeffs)));
}

Element word(Algebra& alg, const std::string& w) { return alg.evaluate(parse_word(w)); }

}  // namespace

TEST(Context, DimensionAndIndexRoundTrip) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto ctx = AlgebraContext::create(n, d);
    std::size_t expected = 1;
    for (int k = 1; k <= n; ++k) expected *= 2 * d * k;
    EXPECT_EQ(ctx->dimension(), expected);
    for (BasisId b = 0; b < ctx->dimension(); ++b) EXPECT_EQ(ctx->id(ctx->index(b)), b);
    EXPECT_EQ(ctx->one_id(), 0u);
    EXPECT_EQ(ctx->word_of(ctx->one_id()), "1");
  }
}

TEST(Context, RejectsBadParameters) {
  EXPECT_THROW(AlgebraContext::create(0, 2), std::invalid_argument);
  EXPECT_THROW(AlgebraContext::create(2, 0), std::invalid_argument);
  EXPECT_THROW(AlgebraContext::create(9, 1), std::invalid_argument);
  // odd offset below d
  EXPECT_THROW(AlgebraContext::create(1, 2, {{1, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(AlgebraContext::create(1, 2, {{2, Rational(3)}}), std::invalid_argument);
  EXPECT_NO_THROW(AlgebraContext::create(1, 2, {{0, Rational(3)}}));
  EXPECT_NO_THROW(AlgebraContext::create_base(2));
}

TEST(Context, ReducedWordsHaveInversionLength) {
  const auto ctx = AlgebraContext::create(4, 1);
  for (std::uint32_t w = 0; w < ctx->perm_count(); ++w) {
    const auto& p = ctx->permutation(w);
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    EXPECT_EQ(ctx->length(w), inversions);
    std::uint32_t v = 0;
    for (int i : ctx->reduced_word(w)) v = ctx->right_s(v, i);
    EXPECT_EQ(v, w);
    EXPECT_EQ(ctx->compose(w, ctx->inverse(w)), 0u);
  }
}

TEST(Multiply, HandComputedProducts) {
  Algebra alg = make(2, 2);
  // s1 x1 = x2 s1 - 1 - c1 c2
  const Element lhs = word(alg, "s1 x1");
  Element rhs = word(alg, "x2 s1");
  rhs -= alg.one();
  rhs -= word(alg, "c1 c2");
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(word(alg, "c1 c1"), alg.one());
  EXPECT_EQ(word(alg, "c1 c2 c1 c2"), -alg.one());
  EXPECT_EQ(word(alg, "s1 s1"), alg.one());
  EXPECT_EQ(word(alg, "x1 x1"), alg.zero());
  EXPECT_EQ(word(alg, "c1 x1"), -word(alg, "x1 c1"));
  EXPECT_EQ(word(alg, "s1 c1"), word(alg, "c2 s1"));
}

TEST(Multiply, LevelOneRelations) {
  Algebra alg = make(2, 1);
  EXPECT_TRUE(word(alg, "x1").is_zero());
  Element expected = word(alg, "s1");
  expected += word(alg, "c1 c2 s1");
  EXPECT_EQ(word(alg, "x2"), expected);
}

TEST(Multiply, CyclotomicRelationWithConstantTerm) {
  Algebra alg = make(1, 2, {{0, Rational(3)}});
  EXPECT_EQ(word(alg, "x1 x1"), -3 * alg.one());
  Algebra alg4 = make(1, 4, {{0, Rational(1)}, {2, Rational(-2)}});
  Element e = word(alg4, "x1^4");
  Element expected = 2 * word(alg4, "x1^2");
  expected -= alg4.one();
  EXPECT_EQ(e, expected);
}

TEST(Multiply, ContextMismatchThrows) {
  Algebra a = make(2, 2), b = make(2, 2);
  EXPECT_THROW(a.multiply(a.one(), b.one()), ContextMismatch);
  EXPECT_THROW(a.lmul(Generator::s(2), a.one()), std::out_of_range);
}

TEST(Multiply, WordRepetitionAndS0) {
  Algebra alg = make(2, 3);
  EXPECT_EQ(word(alg, "x1^2"), word(alg, "x1 x1"));
  EXPECT_EQ(word(alg, "s0^2"), word(alg, "x1 x1"));
}

TEST(Clifford, SignBookkeeping) {
  // c1 appended to c2: c2 c1 = -c1 c2
  EXPECT_EQ(clifford_append(0b10, 1), std::make_pair(0b11u, -1));
  EXPECT_EQ(clifford_append(0b01, 2), std::make_pair(0b11u, 1));
  EXPECT_EQ(clifford_append(0b01, 1), std::make_pair(0b00u, 1));
  EXPECT_EQ(clifford_prepend(2, 0b01), std::make_pair(0b11u, -1));
}

TEST(AlgebraProperty, Associativity) {
  gen::Rng rng(21);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    AlgebraContext::CoefficientMap coeffs;
    if (d % 2 == 0) coeffs[0] = Rational(-2, 3);
    Algebra alg = make(n, d, coeffs);
    for (int t = 0; t < 25; ++t) {
      const auto a = gen::element(rng, alg), b = gen::element(rng, alg), c = gen::element(rng, alg);
      EXPECT_EQ(alg.multiply(alg.multiply(a, b), c), alg.multiply(a, alg.multiply(b, c)));
    }
  }
}

TEST(AlgebraProperty, BilinearAndUnital) {
  gen::Rng rng(22);
  Algebra alg = make(2, 3);
  for (int t = 0; t < 40; ++t) {
    const auto a = gen::element(rng, alg), b = gen::element(rng, alg), c = gen::element(rng, alg);
    const Rational k = gen::small_rational(rng);
    Element sum = b;
    sum += c;
    Element lhs = alg.multiply(a, sum);
    Element rhs = alg.multiply(a, b);
    rhs += alg.multiply(a, c);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(alg.multiply(a, k * b), k * alg.multiply(a, b));
    EXPECT_EQ(alg.multiply(alg.one(), a), a);
    EXPECT_EQ(alg.multiply(a, alg.one()), a);
  }
}

TEST(AlgebraProperty, ParityIsMultiplicative) {
  gen::Rng rng(23);
  Algebra alg = make(3, 2);
  for (int t = 0; t < 200; ++t) {
    const BasisId u = gen::basis_id(rng, alg), v = gen::basis_id(rng, alg);
    const auto p = alg.multiply(alg.basis(u), alg.basis(v));
    if (p.is_zero()) continue;
    EXPECT_EQ(alg.parity(p), (alg.context().parity(u) + alg.context().parity(v)) % 2);
  }
}

TEST(AlgebraProperty, BasisWordEvaluatesToBasisElement) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    Algebra alg = make(n, d);
    for (BasisId b = 0; b < alg.dimension(); ++b) {
      const std::string w = alg.context().word_of(b);
      EXPECT_EQ(alg.evaluate(parse_word(w == "1" ? "" : w)), alg.basis(b)) << w;
    }
  }
}

TEST(AlgebraProperty, CommutatorSigns) {
  gen::Rng rng(24);
  Algebra alg = make(2, 2);
  for (int t = 0; t < 100; ++t) {
    const auto u = alg.basis(gen::basis_id(rng, alg)), v = alg.basis(gen::basis_id(rng, alg));
    const int pu = *alg.parity(u), pv = *alg.parity(v);
    Element ungraded = alg.multiply(u, v);
    ungraded -= alg.multiply(v, u);
    EXPECT_EQ(alg.commutator(u, v, false), ungraded);
    Element graded = alg.multiply(u, v);
    graded.add_scaled(alg.multiply(v, u), (pu && pv) ? 1 : -1);
    EXPECT_EQ(alg.commutator(u, v, true), graded);
  }
}

TEST(AlgebraProperty, IntegerCoefficientsGiveIntegerStructureConstants) {
  Algebra alg = make(2, 2, {{0, Rational(5)}});
  for (BasisId u = 0; u < alg.dimension(); ++u)
    for (BasisId v = 0; v < alg.dimension(); ++v) alg.multiply(alg.basis(u), alg.basis(v));
  EXPECT_FALSE(alg.non_integral_witness().has_value());
}
