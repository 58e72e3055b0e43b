#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sergeev {

/// Weakly decreasing sequence of positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool is_strict() const;
  bool is_odd() const;
  bool is_even() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

using MultiPartition = std::vector<Partition>;

enum class PartitionFilter { All, Strict, Odd, Even };

/// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enum_partitions(int n, PartitionFilter filter = PartitionFilter::All);

/// All multipartitions of n with the given number of components.
std::vector<MultiPartition> enum_multipartitions(int n, int components);

enum class IndexSet {
  P0m,   // m-multipartitions of n
  Psm,   // strict partition of a, times m-multipartition of n - a
  MP0m,  // equals P0m
  MPsm,  // as Psm, strict component of even length
};

/// Cardinality of the index sets labelling simple (type M) modules of the
/// generic algebra at level d, with m = floor(d / 2). Throws on d = 0.
std::uint64_t count_index_set(int n, int d, IndexSet which);

/// Pair (lambda, mu): lambda is a colored opposite partition (weakly
/// increasing parts, colors in 1..d-1, colors weakly decreasing along runs
/// of equal parts) and mu is an ordinary partition.
struct ColoredSemiBipartition {
  std::vector<int> lambda;
  std::vector<int> colors;
  Partition mu;

  int size() const;
  int length() const { return static_cast<int>(lambda.size() + mu.parts.size()); }
  /// lambda followed by mu.
  std::vector<int> bar_alpha() const;
  /// colors followed by one zero per part of mu.
  std::vector<int> epsilon() const;
  /// r_1 = 0, r_i = partial sums of bar_alpha, r_{k+1} = n. Returned 0-based:
  /// element i is r_{i+1}, so the vector has length() + 1 entries.
  std::vector<int> r() const;

  /// Structural validity for level d (ordering, color range, color datum).
  bool is_valid(int d) const;
  bool in_tilde() const;
  bool in_hat() const;

  std::string to_string() const;

  friend bool operator==(const ColoredSemiBipartition&, const ColoredSemiBipartition&) = default;
};

/// All colored semi-bipartitions of n at level d, ordered by
/// (|lambda|, lambda, colors, mu) with mu in enum_partitions order.
std::vector<ColoredSemiBipartition> enum_colored_semibipartitions(int n, int d);

enum class LabelSet { Tilde, Hat };

std::vector<ColoredSemiBipartition> filter_index_set(const std::vector<ColoredSemiBipartition>& all,
                                                     LabelSet which);

/// d-multipartition: component 1 is mu, component i >= 2 collects the rows
/// of lambda colored i - 1 sorted decreasingly.
MultiPartition theta_bijection(const ColoredSemiBipartition& beta, int d);

enum class TokenKind : std::uint8_t { S0, S, X, C };

/// One letter of a generator word. For S0 the value is the exponent; for the
/// others it is the 1-based generator index.
struct Token {
  TokenKind kind;
  int value;

  static Token s0(int power) { return {TokenKind::S0, power}; }
  static Token s(int i) { return {TokenKind::S, i}; }
  static Token x(int k) { return {TokenKind::X, k}; }
  static Token c(int k) { return {TokenKind::C, k}; }

  /// Letters counted for length purposes: S0^l counts as l.
  int weight() const { return kind == TokenKind::S0 ? value : 1; }

  friend bool operator==(const Token&, const Token&) = default;
};

struct GeneratorWord {
  std::vector<Token> tokens;

  int length() const;
  /// Space separated, e.g. "s0^2 s1 c2".
  std::string to_string() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Parses "s0^l s<i> x<k> c<k>" tokens; throws std::invalid_argument.
GeneratorWord parse_word(const std::string& text);

/// Clifford indices multiplied on the right, in increasing order.
using CliffordMask = std::vector<int>;

/// Concatenation over i of s'_{r_i, eps_i} s_{r_i+1} ... s_{r_{i+1}-1}
/// (the s' prefix omitted when eps_i = 0), where
/// s'_{k,l} = s_k ... s_1 s0^l s_1 ... s_k.
GeneratorWord minimal_word(const ColoredSemiBipartition& beta);

struct DecoratedWord {
  GeneratorWord word;
  CliffordMask mask;
};

/// minimal_word together with the mask { r_{i+1} : eps_i even }. Throws
/// std::invalid_argument when beta is not in the hat set.
DecoratedWord clifford_decorated_word(const ColoredSemiBipartition& beta);

}  // namespace sergeev
