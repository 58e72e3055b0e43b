#include "sergeev/trace_form.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace sergeev {

namespace {

using linalg::SparseMatrix;
using linalg::SparseVector;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

VerificationReport make_report(const std::string& check, const AlgebraContext& ctx) {
  VerificationReport r;
  r.check = check;
  r.n = ctx.n();
  r.d = ctx.d();
  r.coeffs = ctx.coefficients_string();
  return r;
}

Element random_element(Algebra& alg, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<BasisId> pick(0, static_cast<BasisId>(alg.dimension() - 1));
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element e = alg.zero();
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    e.add_term(pick(rng), c);
  }
  return e;
}

// Right factorization u = p * g with coefficient 1.
std::pair<Generator, BasisId> right_factor(const AlgebraContext& ctx, BasisId u) {
  const std::uint32_t w = ctx.perm(u);
  if (w != 0) {
    int i = 1;
    while (ctx.perm_value(w, i) < ctx.perm_value(w, i + 1)) ++i;
    return {Generator::s(i), ctx.make_id(ctx.alpha_code(u), ctx.cliff(u), ctx.right_s(w, i))};
  }
  const std::uint32_t I = ctx.cliff(u);
  if (I != 0) {
    const int k = 32 - std::countl_zero(I);
    return {Generator::c(k), ctx.make_id(ctx.alpha_code(u), I ^ (1u << (k - 1)), 0)};
  }
  int j = ctx.n();
  while (ctx.alpha(u, j) == 0) --j;
  return {Generator::x(j), u - ctx.make_id(ctx.alpha_step(j), 0, 0)};
}

}  // namespace

SparseVector coordinates(const Algebra& alg, const Element& e) {
  alg.check_same_context(e);
  std::vector<SparseVector::Entry> entries(e.terms().begin(), e.terms().end());
  return SparseVector::from_entries(alg.dimension(), std::move(entries));
}

Element from_coordinates(const Algebra& alg, const SparseVector& v) {
  Element e = alg.zero();
  for (const auto& [i, c] : v.entries()) e.add_term(static_cast<BasisId>(i), c);
  return e;
}

Rational trace(const AlgebraContext& ctx, const Element& e) {
  if (e.context_uid() != 0 && e.context_uid() != ctx.uid())
    throw ContextMismatch("element belongs to a different algebra");
  return e.coefficient(ctx.top_id());
}

BasisId embed_id(const AlgebraContext& small, const AlgebraContext& big, BasisId b) {
  if (big.n() != small.n() + 1 || big.d() != small.d())
    throw std::invalid_argument("embedding needs ranks n and n+1 at the same level");
  BasisIndex idx = small.index(b);
  idx.alpha.push_back(0);
  idx.perm.push_back(big.n());
  return big.id(idx);
}

Element embed(const Algebra& small, const Algebra& big, const Element& e) {
  small.check_same_context(e);
  Element out = big.zero();
  for (const auto& [b, c] : e.terms()) out.add_term(embed_id(small.context(), big.context(), b), c);
  return out;
}

// ---------------------------------------------------------------------------

ThetaSolver::ThetaSolver(Algebra& small, Algebra& big) : small_(&small), big_(&big) {
  const auto& sc = small.context();
  const auto& bc = big.context();
  if (bc.n() != sc.n() + 1 || bc.d() != sc.d() || bc.coefficients() != sc.coefficients())
    throw std::invalid_argument("theta solver needs H_n and H_{n+1} with the same cyclotomic polynomial");
  const int n = sc.n();
  const int d = sc.d();
  SparseMatrix columns(bc.dimension());
  for (int j = 1; j <= n + 1; ++j) {
    std::uint32_t w = 0;
    for (int i = j; i <= n; ++i) w = bc.right_s(w, i);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < 2; ++b) {
        const BasisId prefix =
            bc.make_id(static_cast<std::uint32_t>(a) * bc.alpha_step(j), b ? (1u << (j - 1)) : 0u, w);
        for (BasisId h = 0; h < sc.dimension(); ++h) {
          const Element col = big.multiply_basis(prefix, big.basis(embed_id(sc, bc, h)));
          columns.add_row(coordinates(big, col));
        }
      }
    }
  }
  solver_ = std::make_unique<linalg::SquareSolver>(columns.transpose());
}

std::size_t ThetaSolver::column(int j, int a, int b, BasisId h) const {
  const int d = small_->context().d();
  return (static_cast<std::size_t>((j - 1) * 2 * d + 2 * a + b)) * small_->dimension() + h;
}

Element ThetaSolver::coordinate(const Element& y, int j, int a, int b) const {
  const int n = small_->context().n();
  if (j < 1 || j > n + 1 || a < 0 || a >= small_->context().d() || b < 0 || b > 1)
    throw std::out_of_range("free generator index out of range");
  const SparseVector v = coordinates(*big_, y);
  Element out = small_->zero();
  for (BasisId h = 0; h < small_->dimension(); ++h)
    out.add_term(h, solver_->inverse_row(column(j, a, b, h)).dot(v));
  return out;
}

Element ThetaSolver::project(const Element& y) const {
  return coordinate(y, small_->context().n() + 1, small_->context().d() - 1, 0);
}

ThetaTower::ThetaTower(Algebra& top) : top_(&top) {
  const auto& ctx = top.context();
  const int n = ctx.n();
  levels_.assign(n + 1, nullptr);
  levels_[n] = &top;
  for (int k = n - 1; k >= 0; --k) {
    auto c = k == 0 ? AlgebraContext::create_base(ctx.d(), ctx.coefficients())
                    : AlgebraContext::create(k, ctx.d(), ctx.coefficients());
    owned_.push_back(std::make_unique<Algebra>(c));
    levels_[k] = owned_.back().get();
  }
  for (int k = 1; k <= n; ++k) solvers_.push_back(std::make_unique<ThetaSolver>(*levels_[k - 1], *levels_[k]));
}

Algebra& ThetaTower::algebra(int k) const {
  if (k < 0 || k > rank()) throw std::out_of_range("tower level out of range");
  return *levels_[k];
}

Rational ThetaTower::trace_from(int k, const Element& e) const {
  Element cur = e;
  for (int level = k; level >= 1; --level) cur = solver(level).project(cur);
  return cur.coefficient(0);
}

Rational ThetaTower::trace(const Element& e) const { return trace_from(rank(), e); }

// ---------------------------------------------------------------------------

PairTable::PairTable(Algebra& alg) {
  const auto& ctx = alg.context();
  const std::size_t dim = ctx.dimension();
  const auto gens = alg.generators();

  // transposed[g][b] lists (v, coeff) with coeff = [g v]_b.
  std::vector<std::vector<std::vector<SparseVector::Entry>>> transposed(gens.size());
  auto gen_index = [&](Generator g) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == g) return i;
    throw std::logic_error("unknown generator");
  };
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    transposed[gi].resize(dim);
    for (BasisId v = 0; v < dim; ++v)
      for (const auto& [b, c] : alg.lmul(gens[gi], v).terms()) transposed[gi][b].emplace_back(v, c);
  }

  std::vector<std::pair<int, BasisId>> order(dim);
  for (BasisId u = 0; u < dim; ++u)
    order[u] = {ctx.degree(u) + std::popcount(ctx.cliff(u)) + ctx.length(ctx.perm(u)), u};
  std::sort(order.begin(), order.end());

  rows_.assign(dim, SparseVector(dim));
  rows_[0] = SparseVector::unit(dim, ctx.top_id());
  for (const auto& [depth, u] : order) {
    if (depth == 0) continue;
    const auto [g, p] = right_factor(ctx, u);
    const auto& column = transposed[gen_index(g)];
    std::vector<SparseVector::Entry> acc;
    for (const auto& [b, fb] : rows_[p].entries())
      for (const auto& [v, c] : column[b]) acc.emplace_back(v, fb * c);
    rows_[u] = SparseVector::from_entries(dim, std::move(acc));
  }
}

SparseMatrix PairTable::matrix() const { return SparseMatrix(rows_.size(), rows_); }

VerificationReport check_trace_symmetry(Algebra& alg, const PairTable& table) {
  const auto start = std::chrono::steady_clock::now();
  const auto& ctx = alg.context();
  auto r = make_report("trace_symmetry", ctx);
  r.expected = Expectation{"0 failures", Provenance::Published,
                           ctx.d() % 2 ? "the Frobenius form is symmetric at odd level"
                                       : "the Frobenius form is supersymmetric at even level"};
  const std::size_t dim = ctx.dimension();
  r.cases_tested = static_cast<std::uint64_t>(dim) * dim;
  for (BasisId u = 0; u < dim; ++u) {
    for (const auto& [vi, tuv] : table.row(u).entries()) {
      const BasisId v = static_cast<BasisId>(vi);
      const int sign = ((ctx.d() - 1) % 2 == 1 && ctx.parity(u) == 1 && ctx.parity(v) == 1) ? -1 : 1;
      const Rational tvu = table.at(v, u);
      if (tvu * sign != tuv)
        r.fail("u = " + ctx.word_of(u) + ", v = " + ctx.word_of(v) + ": t(uv) = " + to_string(tuv) +
               ", t(vu) = " + to_string(tvu));
    }
  }
  r.computed = std::to_string(r.failure_count) + " failures";
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_trace_symmetry(Algebra& alg) { return check_trace_symmetry(alg, PairTable(alg)); }

VerificationReport check_trace_even(Algebra& alg) {
  const auto& ctx = alg.context();
  auto r = make_report("trace_vanishes_on_odd_part", ctx);
  r.expected = Expectation{"0 failures", Provenance::Trivial, "the top basis element is even"};
  for (BasisId b = 0; b < ctx.dimension(); ++b) {
    if (ctx.parity(b) == 0) continue;
    ++r.cases_tested;
    const Rational t = trace(ctx, alg.basis(b));
    if (t != 0) r.fail(ctx.word_of(b) + " has trace " + to_string(t));
  }
  r.computed = std::to_string(r.failure_count) + " failures";
  return r;
}

SparseMatrix gram_matrix(Algebra& alg) { return PairTable(alg).matrix(); }

SparseMatrix gram_of_elements(Algebra& alg, const std::vector<Element>& elements) {
  SparseMatrix g(elements.size());
  for (const auto& u : elements) {
    std::vector<SparseVector::Entry> row;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      Rational t = trace(alg.context(), alg.multiply(u, elements[j]));
      if (t != 0) row.emplace_back(j, t);
    }
    g.add_row(SparseVector::from_entries(elements.size(), std::move(row)));
  }
  return g;
}

Rational gram_determinant(Algebra& alg) { return linalg::determinant(gram_matrix(alg)); }

TraceFormSpace even_traceform_space(Algebra& alg, std::uint64_t seed, int random_combinations) {
  const auto& ctx = alg.context();
  const std::size_t dim = ctx.dimension();
  TraceFormSpace out;
  out.algebra_dimension = dim;

  SparseMatrix constraints(dim);
  for (BasisId b = 0; b < dim; ++b)
    if (ctx.parity(b) == 1) constraints.add_row(SparseVector::unit(dim, b));
  for (BasisId a = 0; a < dim; ++a)
    for (const auto& g : alg.generators())
      constraints.add_row(coordinates(alg, alg.commutator(alg.basis(a), alg.generator(g), false)));
  const auto kernel = linalg::kernel_basis(constraints);
  out.dimension = kernel.size();
  if (kernel.empty()) return out;

  std::vector<std::vector<SparseVector>> products(dim);
  for (BasisId u = 0; u < dim; ++u)
    for (BasisId v = 0; v < dim; ++v) products[u].push_back(coordinates(alg, alg.multiply_basis(u, alg.basis(v))));

  auto gram_rank = [&](const SparseVector& f) {
    SparseMatrix g(dim);
    for (BasisId u = 0; u < dim; ++u) {
      std::vector<SparseVector::Entry> row;
      for (BasisId v = 0; v < dim; ++v) {
        Rational x = products[u][v].dot(f);
        if (x != 0) row.emplace_back(v, x);
      }
      g.add_row(SparseVector::from_entries(dim, std::move(row)));
    }
    return linalg::rank(g);
  };

  for (const auto& f : kernel) out.max_gram_rank = std::max(out.max_gram_rank, gram_rank(f));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int k = 0; k < random_combinations && kernel.size() > 1; ++k) {
    SparseVector f(dim);
    for (const auto& v : kernel) f.add_scaled(Rational(coeff(rng)), v);
    out.max_gram_rank = std::max(out.max_gram_rank, gram_rank(f));
  }
  return out;
}

VerificationReport check_theta_trace(Algebra& alg, const ThetaTower& tower) {
  const auto start = std::chrono::steady_clock::now();
  const auto& ctx = alg.context();
  auto r = make_report("theta_trace_agreement", ctx);
  r.expected = Expectation{"0 failures", Provenance::Published,
                           "the composed projections equal the closed-formula trace"};
  for (BasisId b = 0; b < ctx.dimension(); ++b) {
    ++r.cases_tested;
    const Element e = alg.basis(b);
    const Rational via = tower.trace(e);
    const Rational closed = trace(ctx, e);
    if (via != closed)
      r.fail(ctx.word_of(b) + ": theta gives " + to_string(via) + ", closed formula " + to_string(closed));
  }
  r.computed = std::to_string(r.failure_count) + " failures";
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_theta_conjugation(const ThetaTower& tower, int k) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 1 || k + 1 > tower.rank()) throw std::out_of_range("conjugation check needs 1 <= k < rank");
  Algebra& lower = tower.algebra(k - 1);
  Algebra& mid = tower.algebra(k);
  Algebra& upper = tower.algebra(k + 1);
  auto r = make_report("theta_conjugation", upper.context());
  r.note = "x ranges over the basis of rank " + std::to_string(k);
  r.expected = Expectation{"0 failures", Provenance::Published,
                           "theta_{k+1}(s_k x s_k) equals the embedded theta_k(x)"};
  for (BasisId b = 0; b < mid.dimension(); ++b) {
    ++r.cases_tested;
    Element y = embed(mid, upper, mid.basis(b));
    y = upper.rmul(upper.lmul(Generator::s(k), y), Generator::s(k));
    const Element lhs = tower.solver(k + 1).project(y);
    const Element rhs = embed(lower, mid, tower.solver(k).project(mid.basis(b)));
    if (!(lhs == rhs)) r.fail("x = " + mid.context().word_of(b));
  }
  r.computed = std::to_string(r.failure_count) + " failures";
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_theta_bilinear(const ThetaTower& tower, int k, int samples, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const ThetaSolver& solver = tower.solver(k);
  Algebra& small = solver.small();
  Algebra& big = solver.big();
  auto r = make_report("theta_bimodule_map", big.context());
  r.expected = Expectation{"0 failures", Provenance::Published, "theta is a bimodule homomorphism over the smaller rank"};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    ++r.cases_tested;
    const Element h = random_element(small, rng, 2);
    const Element h2 = random_element(small, rng, 2);
    const Element y = random_element(big, rng, 3);
    const Element lhs = solver.project(big.multiply(embed(small, big, h), big.multiply(y, embed(small, big, h2))));
    const Element rhs = small.multiply(h, small.multiply(solver.project(y), h2));
    if (!(lhs == rhs)) r.fail("sample " + std::to_string(s) + " of seed " + std::to_string(seed));
  }
  r.computed = std::to_string(r.failure_count) + " failures";
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_conjugated_powers(const ThetaSolver& solver) {
  Algebra& small = solver.small();
  Algebra& big = solver.big();
  const auto& bc = big.context();
  const int n = small.context().n();
  const int d = bc.d();
  auto r = make_report("conjugated_power_coordinates", bc);
  r.expected = Expectation{"0 failures", Provenance::Published,
                           "conjugating x_i^a c_i^b up to position n+1 gives x_{n+1}^a c_{n+1}^b "
                           "modulo lower free summands"};
  const Element one = small.one();
  for (int i = 1; i <= n; ++i) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < 2; ++b) {
        BasisIndex idx{std::vector<int>(bc.n(), 0), b ? (1u << (i - 1)) : 0u, {}};
        idx.alpha[i - 1] = a;
        idx.perm.resize(bc.n());
        std::iota(idx.perm.begin(), idx.perm.end(), 1);
        Element y = big.basis(idx);
        for (int l = i; l <= n; ++l) y = big.lmul(Generator::s(l), y);
        for (int l = i; l <= n; ++l) y = big.rmul(y, Generator::s(l));
        for (int k = std::max(a - 1, 0); k < d; ++k) {
          for (int e = 0; e < 2; ++e) {
            ++r.cases_tested;
            const Element coord = solver.coordinate(y, n + 1, k, e);
            const Element expect = (k == a && e == b) ? one : small.zero();
            if (!(coord == expect))
              r.fail("i=" + std::to_string(i) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                     " coordinate (" + std::to_string(k) + "," + std::to_string(e) + ")");
          }
        }
      }
    }
  }
  r.computed = std::to_string(r.failure_count) + " failures";
  return r;
}

}  // namespace sergeev
