#include "sergeev/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>

namespace sergeev {

namespace {

std::atomic<std::uint64_t> next_uid{1};

constexpr int kMaxRank = 8;

std::uint32_t factorial(int n) {
  std::uint32_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
  return f;
}

// Lexicographic rank of a permutation of 1..n via its Lehmer code.
std::uint32_t lehmer_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::uint32_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint32_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

}  // namespace

int BasisIndex::parity() const { return std::popcount(cliff) & 1; }

std::pair<std::uint32_t, int> clifford_append(std::uint32_t mask, int k) {
  const std::uint32_t above = mask >> k;
  const int sign = (std::popcount(above) & 1) ? -1 : 1;
  return {mask ^ (1u << (k - 1)), sign};
}

std::pair<std::uint32_t, int> clifford_prepend(int k, std::uint32_t mask) {
  const std::uint32_t below = mask & ((1u << (k - 1)) - 1);
  const int sign = (std::popcount(below) & 1) ? -1 : 1;
  return {mask ^ (1u << (k - 1)), sign};
}

// ---------------------------------------------------------------------------
// AlgebraContext

std::shared_ptr<const AlgebraContext> AlgebraContext::create(int n, int d, CoefficientMap coeffs) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  return std::shared_ptr<const AlgebraContext>(new AlgebraContext(n, d, std::move(coeffs)));
}

std::shared_ptr<const AlgebraContext> AlgebraContext::create_base(int d, CoefficientMap coeffs) {
  return std::shared_ptr<const AlgebraContext>(new AlgebraContext(0, d, std::move(coeffs)));
}

AlgebraContext::AlgebraContext(int n, int d, CoefficientMap coeffs)
    : n_(n), d_(d), uid_(next_uid.fetch_add(1)) {
  if (d < 1) throw std::invalid_argument("level must be >= 1");
  if (n > kMaxRank) throw std::invalid_argument("rank n must be <= " + std::to_string(kMaxRank));
  for (auto& [k, a] : coeffs) {
    if (k == d) {
      if (a != 1) throw std::invalid_argument("leading coefficient a" + std::to_string(d) + " is fixed to 1");
      continue;
    }
    if (k < 0 || k > d) throw std::invalid_argument("coefficient offset a" + std::to_string(k) + " out of range");
    if ((d - k) % 2 != 0) {
      if (a != 0)
        throw std::invalid_argument("coefficient a" + std::to_string(k) +
                                    " must vanish: only offsets of the same parity as d are allowed");
      continue;
    }
    if (a != 0) coeffs_.emplace(k, a);
  }

  long double dim = 1;
  for (int i = 0; i < n; ++i) dim *= 2.0L * d;
  dim *= factorial(n);
  if (dim > 4.0e9L) throw std::invalid_argument("algebra dimension exceeds supported size");
  cliff_count_ = 1u << n;
  perm_count_ = factorial(n);
  dimension_ = static_cast<std::size_t>(dim);

  d_pow_.assign(n + 1, 1);
  for (int k = n - 1; k >= 1; --k) d_pow_[k] = d_pow_[k + 1] * static_cast<std::uint32_t>(d);

  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  left_s_.assign(n, std::vector<std::uint32_t>(perm_count_));
  right_s_.assign(n, std::vector<std::uint32_t>(perm_count_));
  for (int i = 1; i < n; ++i) {
    for (std::uint32_t w = 0; w < perm_count_; ++w) {
      auto left = perms_[w];
      for (int& v : left) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
      }
      left_s_[i][w] = lehmer_rank(left);
      auto right = perms_[w];
      std::swap(right[i - 1], right[i]);
      right_s_[i][w] = lehmer_rank(right);
    }
  }

  reduced_words_.resize(perm_count_);
  for (std::uint32_t w = 0; w < perm_count_; ++w) {
    std::vector<int> word;
    std::uint32_t cur = w;
    while (cur != 0) {
      const auto& q = perms_[cur];
      std::vector<int> inv(n + 1);
      for (int j = 0; j < n; ++j) inv[q[j]] = j + 1;
      int i = 1;
      while (inv[i] < inv[i + 1]) ++i;
      word.push_back(i);
      cur = left_s_[i][cur];
    }
    reduced_words_[w] = std::move(word);
  }

  factors_.resize(dimension_);
  std::vector<std::pair<int, BasisId>> depth(dimension_);
  for (BasisId b = 0; b < dimension_; ++b) {
    const std::uint32_t a = alpha_code(b);
    const std::uint32_t I = cliff(b);
    const std::uint32_t w = perm(b);
    if (a != 0) {
      int j = 1;
      while (alpha(b, j) == 0) ++j;
      factors_[b] = {'x', j, b - make_id(d_pow_[j], 0, 0)};
    } else if (I != 0) {
      const int k = std::countr_zero(I) + 1;
      factors_[b] = {'c', k, make_id(0, I ^ (1u << (k - 1)), w)};
    } else if (w != 0) {
      const int i = reduced_words_[w].front();
      factors_[b] = {'s', i, make_id(0, 0, left_s_[i][w])};
    } else {
      factors_[b] = {'1', 0, 0};
    }
    depth[b] = {degree(b) + std::popcount(I) + length(w), b};
  }
  std::sort(depth.begin(), depth.end());
  construction_order_.reserve(dimension_);
  for (auto& [_, b] : depth) construction_order_.push_back(b);
}

Rational AlgebraContext::coefficient(int k) const {
  if (k == d_) return 1;
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool AlgebraContext::integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

std::string AlgebraContext::coefficients_string() const {
  std::string out;
  for (const auto& [k, a] : coeffs_) {
    if (!out.empty()) out += ',';
    out += "a" + std::to_string(k) + "=" + to_string(a);
  }
  return out;
}

BasisId AlgebraContext::id(const BasisIndex& index) const {
  if (static_cast<int>(index.alpha.size()) != n_ || static_cast<int>(index.perm.size()) != n_)
    throw std::invalid_argument("basis index has wrong length");
  std::uint32_t code = 0;
  for (int k = 1; k <= n_; ++k) {
    const int a = index.alpha[k - 1];
    if (a < 0 || a >= d_) throw std::invalid_argument("x exponent out of range [0, d)");
    code += static_cast<std::uint32_t>(a) * d_pow_[k];
  }
  if (index.cliff >= cliff_count_) throw std::invalid_argument("clifford mask out of range");
  std::vector<int> sorted = index.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n_; ++k)
    if (sorted[k] != k + 1) throw std::invalid_argument("not a permutation");
  return make_id(code, index.cliff, lehmer_rank(index.perm));
}

BasisIndex AlgebraContext::index(BasisId id) const {
  if (id >= dimension_) throw std::out_of_range("basis id out of range");
  BasisIndex out;
  out.alpha.resize(n_);
  for (int k = 1; k <= n_; ++k) out.alpha[k - 1] = alpha(id, k);
  out.cliff = cliff(id);
  out.perm = perms_[perm(id)];
  return out;
}

int AlgebraContext::parity(BasisId id) const { return std::popcount(cliff(id)) & 1; }

int AlgebraContext::degree(BasisId id) const {
  int total = 0;
  for (int k = 1; k <= n_; ++k) total += alpha(id, k);
  return total;
}

std::uint32_t AlgebraContext::perm_rank(const std::vector<int>& one_line) const {
  return lehmer_rank(one_line);
}

std::uint32_t AlgebraContext::compose(std::uint32_t u, std::uint32_t v) const {
  const auto& pu = perms_[u];
  const auto& pv = perms_[v];
  std::vector<int> out(n_);
  for (int j = 0; j < n_; ++j) out[j] = pu[pv[j] - 1];
  return lehmer_rank(out);
}

std::uint32_t AlgebraContext::inverse(std::uint32_t w) const {
  const auto& p = perms_[w];
  std::vector<int> out(n_);
  for (int j = 0; j < n_; ++j) out[p[j] - 1] = j + 1;
  return lehmer_rank(out);
}

BasisId AlgebraContext::top_id() const {
  std::uint32_t code = 0;
  for (int k = 1; k <= n_; ++k) code += static_cast<std::uint32_t>(d_ - 1) * d_pow_[k];
  return make_id(code, 0, 0);
}

std::string AlgebraContext::describe(BasisId id) const {
  std::ostringstream os;
  os << "x^(";
  for (int k = 1; k <= n_; ++k) os << (k > 1 ? "," : "") << alpha(id, k);
  os << ") c{";
  bool first = true;
  for (int k = 1; k <= n_; ++k) {
    if (cliff(id) & (1u << (k - 1))) {
      os << (first ? "" : ",") << k;
      first = false;
    }
  }
  os << "} w[";
  const auto& p = perms_[perm(id)];
  for (int k = 0; k < n_; ++k) os << (k > 0 ? "," : "") << p[k];
  os << "]";
  return os.str();
}

std::string AlgebraContext::word_of(BasisId id) const {
  std::vector<std::string> parts;
  for (int k = 1; k <= n_; ++k) {
    const int a = alpha(id, k);
    if (a == 1) parts.push_back("x" + std::to_string(k));
    else if (a > 1) parts.push_back("x" + std::to_string(k) + "^" + std::to_string(a));
  }
  for (int k = 1; k <= n_; ++k)
    if (cliff(id) & (1u << (k - 1))) parts.push_back("c" + std::to_string(k));
  for (int i : reduced_words_[perm(id)]) parts.push_back("s" + std::to_string(i));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element Element::basis(std::uint64_t context_uid, BasisId id, const Rational& coeff) {
  Element e(context_uid);
  e.add_term(id, coeff);
  return e;
}

Rational Element::coefficient(BasisId id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(BasisId id, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(id, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::adopt(std::uint64_t other_uid) {
  if (other_uid == 0 || other_uid == uid_) return;
  if (uid_ == 0) {
    uid_ = other_uid;
    return;
  }
  throw ContextMismatch("elements belong to different algebras");
}

void Element::add_scaled(const Element& other, const Rational& factor) {
  adopt(other.uid_);
  if (factor == 0) return;
  for (const auto& [id, c] : other.terms_) add_term(id, c * factor);
}

Element& Element::operator+=(const Element& other) {
  adopt(other.uid_);
  for (const auto& [id, c] : other.terms_) add_term(id, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  adopt(other.uid_);
  for (const auto& [id, c] : other.terms_) add_term(id, -c);
  return *this;
}

Element& Element::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, c] : terms_) c *= factor;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [_, c] : out.terms_) c = -c;
  return out;
}

std::string Generator::to_string() const {
  const char letter = kind == GeneratorKind::S ? 's' : kind == GeneratorKind::X ? 'x' : 'c';
  return std::string(1, letter) + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(ContextPtr context) : ctx_(std::move(context)) {
  if (!ctx_) throw std::invalid_argument("null algebra context");
  const int n = ctx_->n();
  const std::size_t slots = n == 0 ? 0 : static_cast<std::size_t>(3 * n - 1);
  cache_.resize(slots);
  in_progress_.resize(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    cache_[s].resize(ctx_->dimension());
    in_progress_[s].assign(ctx_->dimension(), 0);
  }
  x_power_.resize(n + 1);
}

std::vector<Generator> Algebra::generators() const {
  std::vector<Generator> out;
  const int n = ctx_->n();
  for (int i = 1; i < n; ++i) out.push_back(Generator::s(i));
  for (int k = 1; k <= n; ++k) out.push_back(Generator::x(k));
  for (int k = 1; k <= n; ++k) out.push_back(Generator::c(k));
  return out;
}

void Algebra::check_generator(Generator g) const {
  const int n = ctx_->n();
  const int hi = g.kind == GeneratorKind::S ? n - 1 : n;
  if (g.index < 1 || g.index > hi)
    throw std::out_of_range("generator " + g.to_string() + " out of range for n = " + std::to_string(n));
}

void Algebra::check_same_context(const Element& e) const {
  if (e.context_uid() != 0 && e.context_uid() != ctx_->uid())
    throw ContextMismatch("element belongs to a different algebra");
}

std::size_t Algebra::slot(Generator g) const {
  const int n = ctx_->n();
  switch (g.kind) {
    case GeneratorKind::S:
      return g.index - 1;
    case GeneratorKind::X:
      return n - 1 + g.index - 1;
    default:
      return 2 * n - 1 + g.index - 1;
  }
}

Element Algebra::generator(Generator g) { return lmul(g, ctx_->one_id()); }

const Element& Algebra::lmul(Generator g, BasisId b) {
  check_generator(g);
  const std::size_t s = slot(g);
  if (cache_[s][b]) return *cache_[s][b];
  if (in_progress_[s][b]) throw std::logic_error("cyclic reduction for " + g.to_string() + " * " + ctx_->describe(b));
  in_progress_[s][b] = 1;
  Element r;
  switch (g.kind) {
    case GeneratorKind::S:
      r = compute_s(g.index, b);
      break;
    case GeneratorKind::X:
      r = compute_x(g.index, b);
      break;
    case GeneratorKind::C:
      r = compute_c(g.index, b);
      break;
  }
  in_progress_[s][b] = 0;
  cache_[s][b] = std::make_unique<Element>(std::move(r));
  return *cache_[s][b];
}

Element Algebra::lmul(Generator g, const Element& e) {
  check_same_context(e);
  Element out = zero();
  for (const auto& [b, coeff] : e.terms()) out.add_scaled(lmul(g, b), coeff);
  return out;
}

Element Algebra::lmul(const Token& t, const Element& e) {
  switch (t.kind) {
    case TokenKind::S0: {
      Element r = e;
      for (int p = 0; p < t.value; ++p) r = lmul(Generator::x(1), r);
      return r;
    }
    case TokenKind::S:
      return lmul(Generator::s(t.value), e);
    case TokenKind::X:
      return lmul(Generator::x(t.value), e);
    case TokenKind::C:
      return lmul(Generator::c(t.value), e);
  }
  return e;
}

Element Algebra::compute_c(int k, BasisId b) const {
  const auto& ctx = *ctx_;
  int sign = (ctx.alpha(b, k) & 1) ? -1 : 1;
  auto [mask, s2] = clifford_prepend(k, ctx.cliff(b));
  return basis(ctx.make_id(ctx.alpha_code(b), mask, ctx.perm(b)), sign * s2);
}

Element Algebra::compute_s(int i, BasisId b) {
  const auto& ctx = *ctx_;
  if (ctx.alpha_code(b) == 0) {
    std::uint32_t I = ctx.cliff(b);
    const std::uint32_t lo = 1u << (i - 1);
    const std::uint32_t hi = 1u << i;
    int sign = 1;
    if ((I & lo) && (I & hi)) {
      sign = -1;
    } else if ((I & lo) || (I & hi)) {
      I ^= lo | hi;
    }
    return basis(ctx.make_id(0, I, ctx.left_s(i, ctx.perm(b))), sign);
  }
  int j = 1;
  while (ctx.alpha(b, j) == 0) ++j;
  const BasisId rest = b - ctx.make_id(ctx.alpha_step(j), 0, 0);
  const Element& r = lmul(Generator::s(i), rest);
  const int target = j == i ? i + 1 : j == i + 1 ? i : j;
  Element out = lmul(Generator::x(target), r);
  if (j == i || j == i + 1) {
    out.add_term(rest, j == i ? -1 : 1);
    out -= lmul(Generator::c(i), lmul(Generator::c(i + 1), rest));
  }
  return out;
}

Element Algebra::compute_x(int k, BasisId b) {
  const auto& ctx = *ctx_;
  if (ctx.alpha(b, k) + 1 < ctx.d()) return basis(b + ctx.make_id(ctx.alpha_step(k), 0, 0));
  for (int j = 1; j <= ctx.n(); ++j) {
    if (j == k || ctx.alpha(b, j) == 0) continue;
    const BasisId rest = b - ctx.make_id(ctx.alpha_step(j), 0, 0);
    const Element& r = lmul(Generator::x(k), rest);
    return lmul(Generator::x(j), r);
  }
  return rmul_monomial(x_power_reduction(k), ctx.cliff(b), ctx.perm(b));
}

Element Algebra::rmul_monomial(const Element& e, std::uint32_t cliff, std::uint32_t perm) const {
  const auto& ctx = *ctx_;
  Element out = zero();
  for (const auto& [t, coeff] : e.terms()) {
    const std::uint32_t sigma = ctx.perm(t);
    std::uint32_t mask = ctx.cliff(t);
    int sign = 1;
    for (int i = 1; i <= ctx.n(); ++i) {
      if (!(cliff & (1u << (i - 1)))) continue;
      auto [m2, s2] = clifford_append(mask, ctx.perm_value(sigma, i));
      mask = m2;
      sign *= s2;
    }
    out.add_term(ctx.make_id(ctx.alpha_code(t), mask, ctx.compose(sigma, perm)), sign * coeff);
  }
  return out;
}

const Element& Algebra::x_power_reduction(int k) {
  check_generator(Generator::x(k));
  if (x_power_[k]) return *x_power_[k];
  const auto& ctx = *ctx_;
  const int d = ctx.d();
  Element out = zero();
  if (k == 1) {
    for (int e = d - 2; e >= 0; e -= 2) {
      const Rational a = ctx.coefficient(e);
      if (a != 0) out.add_term(ctx.make_id(static_cast<std::uint32_t>(e) * ctx.alpha_step(1), 0, 0), -a);
    }
  } else {
    const Element prev = x_power_reduction(k - 1);
    const int s = k - 1;
    Element shifted = zero();
    for (const auto& [t, coeff] : prev.terms())
      shifted.add_term(ctx.make_id(ctx.alpha_code(t), ctx.cliff(t), ctx.right_s(ctx.perm(t), s)), coeff);
    out = lmul(Generator::s(s), shifted);
    const std::uint32_t sw = ctx.left_s(s, 0);
    const std::uint32_t pair = (1u << (s - 1)) | (1u << s);
    for (int j = 0; j < d; ++j) {
      const std::uint32_t code = static_cast<std::uint32_t>(j) * ctx.alpha_step(s) +
                                 static_cast<std::uint32_t>(d - 1 - j) * ctx.alpha_step(k);
      out.add_term(ctx.make_id(code, 0, sw), 1);
      out.add_term(ctx.make_id(code, pair, sw), (j % 2 == 0) ? 1 : -1);
    }
  }
  x_power_[k] = std::move(out);
  return *x_power_[k];
}

Element Algebra::rmul(const Element& e, Generator g) {
  check_same_context(e);
  check_generator(g);
  const auto& ctx = *ctx_;
  Element out = zero();
  switch (g.kind) {
    case GeneratorKind::S:
      for (const auto& [t, coeff] : e.terms())
        out.add_term(ctx.make_id(ctx.alpha_code(t), ctx.cliff(t), ctx.right_s(ctx.perm(t), g.index)), coeff);
      break;
    case GeneratorKind::C:
      for (const auto& [t, coeff] : e.terms()) {
        auto [mask, sign] = clifford_append(ctx.cliff(t), ctx.perm_value(ctx.perm(t), g.index));
        out.add_term(ctx.make_id(ctx.alpha_code(t), mask, ctx.perm(t)), sign * coeff);
      }
      break;
    case GeneratorKind::X: {
      const Element x = generator(g);
      for (const auto& [t, coeff] : e.terms()) out.add_scaled(multiply_basis(t, x), coeff);
      break;
    }
  }
  return out;
}

Element Algebra::multiply_basis(BasisId b, const Element& v) {
  const auto& ctx = *ctx_;
  Element r = v;
  const auto& word = ctx.reduced_word(ctx.perm(b));
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = lmul(Generator::s(*it), r);
  const std::uint32_t I = ctx.cliff(b);
  for (int k = ctx.n(); k >= 1; --k)
    if (I & (1u << (k - 1))) r = lmul(Generator::c(k), r);
  for (int k = ctx.n(); k >= 1; --k)
    for (int a = ctx.alpha(b, k); a > 0; --a) r = lmul(Generator::x(k), r);
  return r;
}

Element Algebra::multiply(const Element& u, const Element& v) {
  check_same_context(u);
  check_same_context(v);
  Element out = zero();
  for (const auto& [b, coeff] : u.terms()) out.add_scaled(multiply_basis(b, v), coeff);
  return out;
}

Element Algebra::evaluate(const GeneratorWord& word, const CliffordMask& mask) {
  Element r = one();
  for (int k : mask) r = rmul(r, Generator::c(k));
  for (auto it = word.tokens.rbegin(); it != word.tokens.rend(); ++it) r = lmul(*it, r);
  return r;
}

std::optional<int> Algebra::parity(const Element& e) const {
  std::optional<int> p;
  for (const auto& [b, _] : e.terms()) {
    const int q = ctx_->parity(b);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

Element Algebra::commutator(const Element& u, const Element& v, bool graded) {
  Element uv = multiply(u, v);
  Element vu = multiply(v, u);
  int sign = 1;
  if (graded) {
    const auto pu = parity(u);
    const auto pv = parity(v);
    if (!pu || !pv) throw std::invalid_argument("graded commutator needs homogeneous arguments");
    if (*pu == 1 && *pv == 1) sign = -1;
  }
  uv.add_scaled(vu, -sign);
  return uv;
}

std::size_t Algebra::cached_products() const {
  std::size_t total = 0;
  for (const auto& row : cache_)
    for (const auto& p : row)
      if (p) ++total;
  return total;
}

std::optional<std::string> Algebra::non_integral_witness() const {
  const auto gens = generators();
  for (const auto& g : gens) {
    const auto& row = cache_[slot(g)];
    for (BasisId b = 0; b < row.size(); ++b) {
      if (!row[b]) continue;
      for (const auto& [t, c] : row[b]->terms())
        if (!is_integer(c))
          return g.to_string() + " * " + ctx_->describe(b) + " has coefficient " + to_string(c) + " at " +
                 ctx_->describe(t);
    }
  }
  return std::nullopt;
}

std::string format_element(const AlgebraContext& ctx, const Element& e) {
  if (e.is_zero()) return "0\n";
  std::string out;
  for (const auto& [b, c] : e.terms()) out += to_string(c) + " * " + ctx.describe(b) + "\n";
  return out;
}

}  // namespace sergeev
