#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sergeev/combinatorics.hpp"

using namespace sergeev;

namespace {

// generating-function oracles
std::vector<long long> multipartition_counts(int m, int N) {
  std::vector<long long> s(N + 1, 0);
  s[0] = 1;
  for (int c = 0; c < m; ++c)
    for (int k = 1; k <= N; ++k)
      for (int i = k; i <= N; ++i) s[i] += s[i - k];
  return s;
}

// strict partitions by length parity: out[parity][n]
std::array<std::vector<long long>, 2> strict_by_parity(int N) {
  std::vector<std::vector<long long>> t(N + 1, std::vector<long long>(2, 0));
  t[0][0] = 1;
  for (int k = 1; k <= N; ++k)
    for (int i = N; i >= k; --i)
      for (int p = 0; p < 2; ++p) t[i][p ^ 1] += t[i - k][p];
  std::array<std::vector<long long>, 2> out;
  for (int p = 0; p < 2; ++p)
    for (int i = 0; i <= N; ++i) out[p].push_back(t[i][p]);
  return out;
}

long long psm_oracle(int n, int d, bool even_length_only) {
  const auto mp = multipartition_counts(d / 2, n);
  const auto strict = strict_by_parity(n);
  long long total = 0;
  for (int a = 0; a <= n; ++a) total += (strict[0][a] + (even_length_only ? 0 : strict[1][a])) * mp[n - a];
  return total;
}

ColoredSemiBipartition csb(std::vector<int> lambda, std::vector<int> colors, std::vector<int> mu) {
  return {std::move(lambda), std::move(colors), Partition{std::move(mu)}};
}

}  // namespace

TEST(Partitions, SmallCases) {
  const auto all = enum_partitions(3);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].parts, (std::vector<int>{3}));
  EXPECT_EQ(all[1].parts, (std::vector<int>{2, 1}));
  EXPECT_EQ(all[2].parts, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(enum_partitions(3, PartitionFilter::Strict).size(), 2u);
  const auto empty = enum_partitions(0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].parts.empty());
}

TEST(Partitions, CountsMatchGeneratingFunctions) {
  const auto p = multipartition_counts(1, 12);
  const auto strict = strict_by_parity(12);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(static_cast<long long>(enum_partitions(n).size()), p[n]) << n;
    EXPECT_EQ(static_cast<long long>(enum_partitions(n, PartitionFilter::Strict).size()), strict[0][n] + strict[1][n]);
    // odd parts and strict parts are equinumerous
    EXPECT_EQ(enum_partitions(n, PartitionFilter::Odd).size(), enum_partitions(n, PartitionFilter::Strict).size());
  }
}

TEST(Partitions, FiltersAndOrder) {
  for (int n = 0; n <= 9; ++n) {
    const auto all = enum_partitions(n);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const Partition& a, const Partition& b) { return a > b; }));
    std::set<std::vector<int>> seen;
    for (const auto& p : all) {
      EXPECT_EQ(p.size(), n);
      EXPECT_TRUE(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
      EXPECT_TRUE(seen.insert(p.parts).second);
    }
    for (const auto& p : enum_partitions(n, PartitionFilter::Even)) EXPECT_TRUE(p.is_even());
  }
}

TEST(Multipartitions, CountsMatchGeneratingFunctions) {
  for (int m = 0; m <= 3; ++m) {
    const auto c = multipartition_counts(m, 7);
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(static_cast<long long>(enum_multipartitions(n, m).size()), c[n]);
  }
}

TEST(IndexSets, SmallCases) {
  EXPECT_EQ(count_index_set(2, 3, IndexSet::Psm), 4u);
  EXPECT_EQ(count_index_set(1, 2, IndexSet::P0m), 1u);
  EXPECT_EQ(count_index_set(2, 1, IndexSet::MPsm), 0u);
  EXPECT_THROW(count_index_set(2, 0, IndexSet::P0m), std::invalid_argument);
}

TEST(IndexSets, CountsMatchOracle) {
  for (int d = 1; d <= 5; ++d)
    for (int n = 0; n <= 8; ++n) {
      const auto mp = multipartition_counts(d / 2, n);
      EXPECT_EQ(static_cast<long long>(count_index_set(n, d, IndexSet::P0m)), mp[n]);
      EXPECT_EQ(static_cast<long long>(count_index_set(n, d, IndexSet::MP0m)), mp[n]);
      EXPECT_EQ(static_cast<long long>(count_index_set(n, d, IndexSet::Psm)), psm_oracle(n, d, false));
      EXPECT_EQ(static_cast<long long>(count_index_set(n, d, IndexSet::MPsm)), psm_oracle(n, d, true));
    }
}

TEST(SemiBipartitions, SmallCases) {
  const auto a = enum_colored_semibipartitions(1, 2);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], csb({}, {}, {1}));
  EXPECT_EQ(a[1], csb({1}, {1}, {}));
  const auto b = enum_colored_semibipartitions(2, 1);
  ASSERT_EQ(b.size(), 2u);
  for (const auto& beta : b) EXPECT_TRUE(beta.lambda.empty());
  EXPECT_EQ(enum_colored_semibipartitions(0, 3).size(), 1u);
}

TEST(SemiBipartitions, FilterExamples) {
  const auto all22 = enum_colored_semibipartitions(2, 2);
  const auto tilde = filter_index_set(all22, LabelSet::Tilde);
  ASSERT_EQ(tilde.size(), 2u);
  EXPECT_NE(std::find(tilde.begin(), tilde.end(), csb({2}, {1}, {})), tilde.end());
  EXPECT_NE(std::find(tilde.begin(), tilde.end(), csb({}, {}, {1, 1})), tilde.end());
  const auto hat = filter_index_set(all22, LabelSet::Hat);
  ASSERT_EQ(hat.size(), 2u);
  EXPECT_NE(std::find(hat.begin(), hat.end(), csb({2}, {1}, {})), hat.end());
  EXPECT_NE(std::find(hat.begin(), hat.end(), csb({1, 1}, {1, 1}, {})), hat.end());
  EXPECT_EQ(filter_index_set(enum_colored_semibipartitions(2, 3), LabelSet::Tilde).size(), 4u);
}

TEST(SemiBipartitions, TildeCountsMatchOracle) {
  for (int d = 1; d <= 5; ++d)
    for (int n = 0; n <= 8; ++n) {
      const auto all = enum_colored_semibipartitions(n, d);
      const long long expected = d % 2 == 0 ? multipartition_counts(d / 2, n)[n] : psm_oracle(n, d, false);
      EXPECT_EQ(static_cast<long long>(filter_index_set(all, LabelSet::Tilde).size()), expected) << n << "," << d;
      for (const auto& b : all) EXPECT_TRUE(b.is_valid(d));
    }
}

TEST(SemiBipartitions, HatAtLevelOneIsStrictEvenLength) {
  for (int n = 0; n <= 8; ++n) {
    const auto hat = filter_index_set(enum_colored_semibipartitions(n, 1), LabelSet::Hat);
    std::size_t expected = 0;
    for (const auto& p : enum_partitions(n, PartitionFilter::Strict)) expected += p.length() % 2 == 0;
    EXPECT_EQ(hat.size(), expected);
    EXPECT_EQ(hat.size(), count_index_set(n, 1, IndexSet::MPsm));
  }
}

TEST(ThetaBijection, SmallCases) {
  EXPECT_EQ(theta_bijection(csb({1}, {1}, {1}), 2), (MultiPartition{{{1}}, {{1}}}));
  EXPECT_EQ(theta_bijection(csb({}, {}, {2, 1}), 3), (MultiPartition{{{2, 1}}, {{}}, {{}}}));
  EXPECT_EQ(theta_bijection(csb({2, 2}, {2, 1}, {1}), 3), (MultiPartition{{{1}}, {{2}}, {{2}}}));
}

TEST(ThetaBijection, IsBijectionOntoMultipartitions) {
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n) {
      const auto all = enum_colored_semibipartitions(n, d);
      std::set<MultiPartition> image;
      for (const auto& b : all) {
        const auto mp = theta_bijection(b, d);
        ASSERT_EQ(static_cast<int>(mp.size()), d);
        int total = 0;
        for (const auto& p : mp) total += p.size();
        EXPECT_EQ(total, n);
        image.insert(mp);
      }
      EXPECT_EQ(image.size(), all.size());
      EXPECT_EQ(image.size(), enum_multipartitions(n, d).size());
    }
}

TEST(Words, ParseAndPrint) {
  const auto w = parse_word("s0^2 s1 x2 c1");
  ASSERT_EQ(w.tokens.size(), 4u);
  EXPECT_EQ(w.tokens[0], Token::s0(2));
  EXPECT_EQ(w.length(), 5);
  EXPECT_EQ(w.to_string(), "s0^2 s1 x2 c1");
  EXPECT_EQ(parse_word(w.to_string()), w);
  EXPECT_TRUE(parse_word("").tokens.empty());
  EXPECT_THROW(parse_word("q3"), std::invalid_argument);
  EXPECT_THROW(parse_word("s"), std::invalid_argument);
}

TEST(Words, MinimalWordExamples) {
  EXPECT_EQ(minimal_word(csb({1}, {1}, {1})).tokens, (std::vector<Token>{Token::s0(1)}));
  EXPECT_EQ(minimal_word(csb({}, {}, {2})).tokens, (std::vector<Token>{Token::s(1)}));
  EXPECT_EQ(minimal_word(csb({2}, {1}, {})).tokens, (std::vector<Token>{Token::s0(1), Token::s(1)}));
}

TEST(Words, DecoratedWordExamples) {
  const auto a = clifford_decorated_word(csb({2}, {1}, {}));
  EXPECT_EQ(a.word.tokens, (std::vector<Token>{Token::s0(1), Token::s(1)}));
  EXPECT_TRUE(a.mask.empty());
  const auto b = clifford_decorated_word(csb({1}, {2}, {1}));
  EXPECT_EQ(b.word.tokens, (std::vector<Token>{Token::s0(2)}));
  EXPECT_EQ(b.mask, (CliffordMask{1, 2}));
  const auto c = clifford_decorated_word(csb({}, {}, {2, 1}));
  EXPECT_EQ(c.word.tokens, (std::vector<Token>{Token::s(1)}));
  EXPECT_EQ(c.mask, (CliffordMask{2, 3}));
  EXPECT_THROW(clifford_decorated_word(csb({}, {}, {1, 1})), std::invalid_argument);
}

TEST(Words, MasksHaveEvenSizeOnHat) {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 6; ++n)
      for (const auto& b : filter_index_set(enum_colored_semibipartitions(n, d), LabelSet::Hat)) {
        const auto dw = clifford_decorated_word(b);
        EXPECT_EQ(dw.mask.size() % 2, 0u) << b.to_string();
        EXPECT_EQ(dw.word, minimal_word(b));
        EXPECT_EQ(minimal_word(b), minimal_word(b));
      }
}
