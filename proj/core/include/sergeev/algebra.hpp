#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sergeev/combinatorics.hpp"
#include "sergeev/rational.hpp"

namespace sergeev {

using BasisId = std::uint32_t;

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// PBW basis element x^alpha c_I w of the cyclotomic Sergeev algebra.
struct BasisIndex {
  std::vector<int> alpha;   // length n, entries in [0, d)
  std::uint32_t cliff = 0;  // bit k-1 set iff c_k occurs; indices increase left to right
  std::vector<int> perm;    // one-line notation, values 1..n

  int parity() const;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Immutable description of the algebra at rank n and level d with
/// g(x) = sum_t a_{d-2t} x^{d-2t}, a_d = 1. Only even offsets d - 2t are
/// storable, so the odd-offset coefficients are zero by construction.
///
/// Basis ids enumerate (alpha, cliff, perm) lexicographically: alpha with
/// alpha_1 most significant, cliff by bitmask value, perm by lexicographic
/// rank of its one-line notation.
class AlgebraContext {
 public:
  /// Offset k -> a_k, for k = d - 2t with t >= 1.
  using CoefficientMap = std::map<int, Rational>;

  /// Throws std::invalid_argument for n < 1, d < 1, a coefficient at an odd
  /// offset, at offset d (a_d = 1 is fixed) or outside [0, d).
  static std::shared_ptr<const AlgebraContext> create(int n, int d, CoefficientMap coeffs = {});
  /// Rank-zero context (the ground ring), used as the bottom of the theta tower.
  static std::shared_ptr<const AlgebraContext> create_base(int d, CoefficientMap coeffs = {});

  int n() const { return n_; }
  int d() const { return d_; }
  int m() const { return d_ / 2; }
  std::uint64_t uid() const { return uid_; }
  std::size_t dimension() const { return dimension_; }

  /// a_k; 1 for k = d, 0 for unset or odd offsets.
  Rational coefficient(int k) const;
  const CoefficientMap& coefficients() const { return coeffs_; }
  bool integer_coefficients() const;
  std::string coefficients_string() const;  // "a0=1/2,a2=-3" or "" for g = x^d

  BasisId id(const BasisIndex& index) const;
  BasisIndex index(BasisId id) const;

  std::uint32_t alpha_code(BasisId id) const { return id / (cliff_count_ * perm_count_); }
  std::uint32_t cliff(BasisId id) const { return (id / perm_count_) % cliff_count_; }
  std::uint32_t perm(BasisId id) const { return id % perm_count_; }
  int alpha(BasisId id, int k) const { return (alpha_code(id) / d_pow_[k]) % d_; }
  int parity(BasisId id) const;
  int degree(BasisId id) const;
  BasisId make_id(std::uint32_t alpha_code, std::uint32_t cliff, std::uint32_t perm) const {
    return (alpha_code * cliff_count_ + cliff) * perm_count_ + perm;
  }
  /// Amount to add to alpha_code to raise alpha_k by one.
  std::uint32_t alpha_step(int k) const { return d_pow_[k]; }

  std::size_t perm_count() const { return perm_count_; }
  const std::vector<int>& permutation(std::uint32_t rank) const { return perms_[rank]; }
  std::uint32_t perm_rank(const std::vector<int>& one_line) const;
  std::uint32_t left_s(int i, std::uint32_t w) const { return left_s_[i][w]; }    // s_i w
  std::uint32_t right_s(std::uint32_t w, int i) const { return right_s_[i][w]; }  // w s_i
  std::uint32_t compose(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t inverse(std::uint32_t w) const;
  int perm_value(std::uint32_t w, int j) const { return perms_[w][j - 1]; }
  /// Canonical reduced word w = s_{l_1} ... s_{l_p} (left descents, smallest first).
  const std::vector<int>& reduced_word(std::uint32_t w) const { return reduced_words_[w]; }
  int length(std::uint32_t w) const { return static_cast<int>(reduced_words_[w].size()); }

  BasisId one_id() const { return 0; }
  /// x_1^{d-1} ... x_n^{d-1}, no Clifford part, identity permutation.
  BasisId top_id() const;

  /// "x^(a1,...,an) c{i,...} w[...]".
  std::string describe(BasisId id) const;
  /// Same element in word syntax, e.g. "x1^2 c1 c3 s2 s1"; "1" for the identity.
  std::string word_of(BasisId id) const;

  /// Every basis element b != 1 factors exactly as g * parent(b) for one
  /// generator g, with coefficient 1. construction_order() lists ids so that
  /// parents precede children, starting with the identity.
  struct Factor {
    char kind;  // 'x', 'c' or 's'
    int index;
    BasisId parent;
  };
  const Factor& factor(BasisId id) const { return factors_[id]; }
  const std::vector<BasisId>& construction_order() const { return construction_order_; }

 private:
  AlgebraContext(int n, int d, CoefficientMap coeffs);

  int n_;
  int d_;
  CoefficientMap coeffs_;
  std::uint64_t uid_;
  std::size_t dimension_;
  std::uint32_t cliff_count_;
  std::uint32_t perm_count_;
  std::vector<std::uint32_t> d_pow_;  // index k in 1..n: d^(n-k)
  std::vector<std::vector<int>> perms_;
  std::map<std::vector<int>, std::uint32_t> perm_lookup_;
  std::vector<std::vector<std::uint32_t>> left_s_;
  std::vector<std::vector<std::uint32_t>> right_s_;
  std::vector<std::vector<int>> reduced_words_;
  std::vector<Factor> factors_;
  std::vector<BasisId> construction_order_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

/// Sparse linear combination of basis elements with exact coefficients.
class Element {
 public:
  using Terms = std::map<BasisId, Rational>;

  Element() = default;
  explicit Element(std::uint64_t context_uid) : uid_(context_uid) {}
  static Element basis(std::uint64_t context_uid, BasisId id, const Rational& coeff = 1);

  std::uint64_t context_uid() const { return uid_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(BasisId id) const;

  void add_term(BasisId id, const Rational& coeff);
  void add_scaled(const Element& other, const Rational& factor);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& factor);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  void adopt(std::uint64_t other_uid);

  std::uint64_t uid_ = 0;
  Terms terms_;
};

enum class GeneratorKind : std::uint8_t { S, X, C };

struct Generator {
  GeneratorKind kind;
  int index;  // 1-based

  static Generator s(int i) { return {GeneratorKind::S, i}; }
  static Generator x(int k) { return {GeneratorKind::X, k}; }
  static Generator c(int k) { return {GeneratorKind::C, k}; }

  int parity() const { return kind == GeneratorKind::C ? 1 : 0; }
  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Multiplication engine. Normal forms are produced by left multiplication
/// with single generators, memoized per (generator, basis element). The
/// caches make an Algebra non-thread-safe; use one instance per thread.
class Algebra {
 public:
  explicit Algebra(ContextPtr context);

  const AlgebraContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  std::size_t dimension() const { return ctx_->dimension(); }

  /// s_1..s_{n-1}, x_1..x_n, c_1..c_n.
  std::vector<Generator> generators() const;

  Element zero() const { return Element(ctx_->uid()); }
  Element one() const { return basis(ctx_->one_id()); }
  Element basis(BasisId id, const Rational& coeff = 1) const {
    return Element::basis(ctx_->uid(), id, coeff);
  }
  Element basis(const BasisIndex& index) const { return basis(ctx_->id(index)); }
  Element generator(Generator g);

  /// Normal form of g * b.
  const Element& lmul(Generator g, BasisId b);
  Element lmul(Generator g, const Element& e);
  Element lmul(const Token& t, const Element& e);
  /// e * g.
  Element rmul(const Element& e, Generator g);

  Element multiply(const Element& u, const Element& v);
  /// b * v for a basis element b.
  Element multiply_basis(BasisId b, const Element& v);

  /// Product of the tokens left to right, then c_i for i in mask.
  Element evaluate(const GeneratorWord& word, const CliffordMask& mask = {});

  /// uv - vu, or uv - (-1)^{|u||v|} vu when graded. Graded brackets need
  /// homogeneous arguments (std::invalid_argument otherwise).
  Element commutator(const Element& u, const Element& v, bool graded);

  /// 0 or 1 for homogeneous elements (zero counts as even), nullopt otherwise.
  std::optional<int> parity(const Element& e) const;

  /// Normal form of x_k^d, derived from the cyclotomic relation for k = 1 and
  /// from x_k^d = s x_{k-1}^d s + sum_j (x_{k-1}^j x_k^{d-1-j}
  /// + (-x_{k-1})^j x_k^{d-1-j} c_{k-1} c_k) s, s = s_{k-1}, for k > 1.
  const Element& x_power_reduction(int k);

  /// Number of memoized generator products.
  std::size_t cached_products() const;
  /// First cached coefficient that is not an integer, if any.
  std::optional<std::string> non_integral_witness() const;

  void check_same_context(const Element& e) const;

 private:
  std::size_t slot(Generator g) const;
  void check_generator(Generator g) const;
  Element compute_s(int i, BasisId b);
  Element compute_x(int k, BasisId b);
  Element compute_c(int k, BasisId b) const;
  Element rmul_monomial(const Element& e, std::uint32_t cliff, std::uint32_t perm) const;

  ContextPtr ctx_;
  std::vector<std::vector<std::unique_ptr<Element>>> cache_;
  std::vector<std::vector<std::uint8_t>> in_progress_;
  std::vector<std::optional<Element>> x_power_;
};

/// c_J c_k: returns (new mask, sign).
std::pair<std::uint32_t, int> clifford_append(std::uint32_t mask, int k);
/// c_k c_J: returns (new mask, sign).
std::pair<std::uint32_t, int> clifford_prepend(int k, std::uint32_t mask);

/// One line per term: "coeff * x^(..) c{..} w[..]".
std::string format_element(const AlgebraContext& ctx, const Element& e);

}  // namespace sergeev
