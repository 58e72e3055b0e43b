#include "sergeev/structure_analysis.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "sergeev/trace_form.hpp"

namespace sergeev {

namespace {

using linalg::RowReducer;
using linalg::SparseMatrix;
using linalg::SparseVector;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport make_report(const std::string& check, const AlgebraContext& ctx) {
  VerificationReport r;
  r.check = check;
  r.n = ctx.n();
  r.d = ctx.d();
  r.coeffs = ctx.coefficients_string();
  return r;
}

void finish_count(VerificationReport& r) {
  if (r.computed.empty()) r.computed = std::to_string(r.failure_count) + " failures";
}

Expectation zero_failures(Provenance p, const std::string& citation) { return {"0 failures", p, citation}; }

using Word = std::vector<Generator>;
using Combination = std::vector<std::pair<Rational, Word>>;

// word applied to b, rightmost letter first.
Element apply_word(Algebra& alg, const Word& word, const Element& b) {
  Element r = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = alg.lmul(*it, r);
  return r;
}

Element apply_combination(Algebra& alg, const Combination& comb, const Element& b) {
  Element out = alg.zero();
  for (const auto& [c, w] : comb) out.add_scaled(apply_word(alg, w, b), c);
  return out;
}

Word x_power(int k, int a) { return Word(static_cast<std::size_t>(a), Generator::x(k)); }

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Checks that every combination annihilates every basis element.
void check_operators(Algebra& alg, const std::vector<std::pair<std::string, Combination>>& relations,
                     VerificationReport& r) {
  const auto& ctx = alg.context();
  for (const auto& [name, comb] : relations) {
    for (BasisId b = 0; b < ctx.dimension(); ++b) {
      ++r.cases_tested;
      const Element e = apply_combination(alg, comb, alg.basis(b));
      if (!e.is_zero()) r.fail(name + " applied to " + ctx.word_of(b));
    }
  }
}

std::size_t index_count(const AlgebraContext& ctx, IndexSet set) { return count_index_set(ctx.n(), ctx.d(), set); }

std::size_t strict_even_length(int n) {
  std::size_t count = 0;
  for (const auto& p : enum_partitions(n, PartitionFilter::Strict))
    if (p.length() % 2 == 0) ++count;
  return count;
}

}  // namespace

std::size_t even_dimension(const AlgebraContext& ctx) {
  std::size_t count = 0;
  for (BasisId b = 0; b < ctx.dimension(); ++b)
    if (ctx.parity(b) == 0) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// CommutatorSpace

CommutatorSpace::CommutatorSpace(std::size_t dimension, bool graded) : graded_(graded), reducer_(dimension) {}

CommutatorSpace::CommutatorSpace(Algebra& alg, bool graded) : CommutatorSpace(alg.dimension(), graded) {
  const auto& ctx = alg.context();
  even_dimension_ = sergeev::even_dimension(ctx);
  const auto gens = alg.generators();
  for (BasisId a = 0; a < ctx.dimension(); ++a) {
    const int pa = ctx.parity(a);
    const Element ea = alg.basis(a);
    for (const auto& g : gens) {
      if ((pa + g.parity()) % 2 != 0) continue;
      Element row = alg.rmul(ea, g);
      const int sign = (graded && pa == 1 && g.parity() == 1) ? -1 : 1;
      row.add_scaled(alg.lmul(g, a), -sign);
      ++rows_generated_;
      reducer_.add(coordinates(alg, row));
    }
  }
}

CommutatorSpace CommutatorSpace::all_pairs(Algebra& alg, bool graded) {
  const auto& ctx = alg.context();
  CommutatorSpace space(alg.dimension(), graded);
  space.even_dimension_ = sergeev::even_dimension(ctx);
  for (BasisId u = 0; u < ctx.dimension(); ++u) {
    const int pu = ctx.parity(u);
    for (BasisId v = u; v < ctx.dimension(); ++v) {
      const int pv = ctx.parity(v);
      if ((pu + pv) % 2 != 0) continue;
      Element row = alg.multiply_basis(u, alg.basis(v));
      const int sign = (graded && pu == 1 && pv == 1) ? -1 : 1;
      row.add_scaled(alg.multiply_basis(v, alg.basis(u)), -sign);
      ++space.rows_generated_;
      space.reducer_.add(coordinates(alg, row));
    }
  }
  return space;
}

std::size_t even_commutator_rank(Algebra& alg, bool graded) { return CommutatorSpace(alg, graded).rank(); }

std::size_t even_commutator_rank_all_pairs(Algebra& alg, bool graded) {
  return CommutatorSpace::all_pairs(alg, graded).rank();
}

std::size_t cocenter_rank(Algebra& alg) { return CommutatorSpace(alg, false).quotient_rank(); }

std::size_t supercocenter_rank(Algebra& alg) { return CommutatorSpace(alg, true).quotient_rank(); }

namespace {

// Coordinates of ([b, g])_g stacked blockwise.
SparseVector stacked_adjoint(Algebra& alg, BasisId b, const std::vector<Generator>& gens) {
  const std::size_t dim = alg.dimension();
  std::vector<SparseVector::Entry> entries;
  const Element eb = alg.basis(b);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    Element c = alg.rmul(eb, gens[gi]);
    c -= alg.lmul(gens[gi], b);
    for (const auto& [t, v] : c.terms()) entries.emplace_back(gi * dim + t, v);
  }
  return SparseVector::from_entries(dim * gens.size(), std::move(entries));
}

}  // namespace

std::size_t center_even_rank(Algebra& alg) {
  const auto& ctx = alg.context();
  const auto gens = alg.generators();
  RowReducer reducer(ctx.dimension() * std::max<std::size_t>(gens.size(), 1));
  std::size_t even = 0;
  for (BasisId b = 0; b < ctx.dimension(); ++b) {
    if (ctx.parity(b) != 0) continue;
    ++even;
    if (!gens.empty()) reducer.add(stacked_adjoint(alg, b, gens));
  }
  return even - reducer.rank();
}

std::vector<Element> center_even_basis(Algebra& alg) {
  const auto& ctx = alg.context();
  const auto gens = alg.generators();
  std::vector<BasisId> even_ids;
  for (BasisId b = 0; b < ctx.dimension(); ++b)
    if (ctx.parity(b) == 0) even_ids.push_back(b);
  SparseMatrix columns(ctx.dimension() * std::max<std::size_t>(gens.size(), 1));
  for (BasisId b : even_ids)
    columns.add_row(gens.empty() ? SparseVector(columns.cols()) : stacked_adjoint(alg, b, gens));
  std::vector<Element> out;
  for (const auto& k : linalg::kernel_basis(columns.transpose())) {
    Element z = alg.zero();
    for (const auto& [i, v] : k.entries()) z.add_term(even_ids[i], v);
    out.push_back(std::move(z));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Class elements

std::vector<Element> class_elements(Algebra& alg, LabelSet which) {
  const auto& ctx = alg.context();
  std::vector<Element> out;
  for (const auto& beta : filter_index_set(enum_colored_semibipartitions(ctx.n(), ctx.d()), which)) {
    if (which == LabelSet::Tilde) {
      out.push_back(alg.evaluate(minimal_word(beta)));
    } else {
      const auto dw = clifford_decorated_word(beta);
      out.push_back(alg.evaluate(dw.word, dw.mask));
    }
  }
  return out;
}

VerificationReport verify_class_basis(Algebra& alg, LabelSet which, const CommutatorSpace& space) {
  const auto start = Clock::now();
  const auto& ctx = alg.context();
  const bool tilde = which == LabelSet::Tilde;
  auto r = make_report(tilde ? "class_basis_tilde" : "class_generators_hat", ctx);
  const auto elems = class_elements(alg, which);
  const auto betas = filter_index_set(enum_colored_semibipartitions(ctx.n(), ctx.d()), which);
  RowReducer reducer = space.reducer();
  std::size_t jump = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    ++r.cases_tested;
    if (alg.parity(elems[i]) != 0) r.fail(betas[i].to_string() + " gives an element that is not even");
    if (reducer.add(coordinates(alg, elems[i])))
      ++jump;
    else if (tilde)
      r.fail(betas[i].to_string() + " is dependent on earlier classes modulo commutators");
  }
  const std::size_t total = reducer.rank();
  const std::size_t even = space.even_dimension();
  r.computed = "rank jump " + std::to_string(jump) + " of " + std::to_string(elems.size()) + ", total " +
               std::to_string(total) + " of " + std::to_string(even);
  if (tilde) {
    r.expected = Expectation{"rank jump " + std::to_string(elems.size()) + " of " + std::to_string(elems.size()) +
                                 ", total " + std::to_string(even) + " of " + std::to_string(even),
                             Provenance::Published,
                             "minimal-length class words indexed by the tilde set form a basis of the even cocenter"};
    if (total != even) r.fail("classes and commutators span only " + std::to_string(total) + " of " + std::to_string(even));
  } else {
    r.expected = Expectation{"total " + std::to_string(even) + " of " + std::to_string(even), Provenance::Published,
                             "Clifford-decorated class words indexed by the hat set span the even supercocenter"};
    if (total != even) r.fail("classes and graded commutators span only " + std::to_string(total) + " of " + std::to_string(even));
    r.note = jump == elems.size() ? "classes are independent modulo graded commutators"
                                  : "classes are dependent modulo graded commutators";
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// Relations

VerificationReport check_weak_braid(Algebra& alg, int a_max, int b_max) {
  const auto start = Clock::now();
  const auto& ctx = alg.context();
  if (ctx.n() < 2) throw std::invalid_argument("weak braid identity needs n >= 2");
  auto r = make_report("weak_braid", ctx);
  r.expected = zero_failures(Provenance::Published, "weak braid identity for s1 and powers of x1");
  const Word s1{Generator::s(1)};
  const Word cc{Generator::c(1), Generator::c(2)};
  const Element one = alg.one();
  for (int a = 1; a <= a_max; ++a) {
    for (int b = 1; b <= b_max; ++b) {
      ++r.cases_tested;
      Combination diff;
      diff.push_back({1, concat({s1, x_power(1, a), s1, x_power(1, b)})});
      diff.push_back({-1, concat({x_power(1, b), s1, x_power(1, a), s1})});
      const Rational sign = (a - 1) % 2 == 0 ? 1 : -1;
      for (int i = 1; i <= b; ++i) {
        diff.push_back({-1, concat({x_power(1, a + b - i), s1, x_power(1, i - 1)})});
        diff.push_back({-sign, concat({x_power(1, a + b - i), cc, s1, x_power(1, i - 1)})});
        diff.push_back({1, concat({x_power(1, i - 1), s1, x_power(1, a + b - i)})});
        diff.push_back({sign, concat({x_power(1, i - 1), cc, s1, x_power(1, a + b - i)})});
      }
      if (!apply_combination(alg, diff, one).is_zero())
        r.fail("a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
  }
  finish_count(r);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_defining_relations(Algebra& alg) {
  const auto start = Clock::now();
  const auto& ctx = alg.context();
  const int n = ctx.n();
  auto r = make_report("defining_relations", ctx);
  r.expected = zero_failures(Provenance::Trivial, "defining relations of the affine Sergeev algebra");
  using G = Generator;
  std::vector<std::pair<std::string, Combination>> rels;
  auto name = [](std::string s) { return s; };
  for (int i = 1; i < n; ++i) {
    const auto is = std::to_string(i);
    const auto ip = std::to_string(i + 1);
    rels.push_back({name("s" + is + "^2 = 1"), {{1, {G::s(i), G::s(i)}}, {-1, {}}}});
    if (i + 1 < n)
      rels.push_back({name("s" + is + " s" + ip + " s" + is + " = s" + ip + " s" + is + " s" + ip),
                      {{1, {G::s(i), G::s(i + 1), G::s(i)}}, {-1, {G::s(i + 1), G::s(i), G::s(i + 1)}}}});
    for (int j = i + 2; j < n; ++j)
      rels.push_back({name("s" + is + " s" + std::to_string(j) + " = s" + std::to_string(j) + " s" + is),
                      {{1, {G::s(i), G::s(j)}}, {-1, {G::s(j), G::s(i)}}}});
    rels.push_back({name("s" + is + " x" + is + " = x" + ip + " s" + is + " - 1 - c" + is + " c" + ip),
                    {{1, {G::s(i), G::x(i)}}, {-1, {G::x(i + 1), G::s(i)}}, {1, {}}, {1, {G::c(i), G::c(i + 1)}}}});
    rels.push_back({name("s" + is + " x" + ip + " = x" + is + " s" + is + " + 1 - c" + is + " c" + ip),
                    {{1, {G::s(i), G::x(i + 1)}}, {-1, {G::x(i), G::s(i)}}, {-1, {}}, {1, {G::c(i), G::c(i + 1)}}}});
    rels.push_back({name("s" + is + " c" + is + " = c" + ip + " s" + is),
                    {{1, {G::s(i), G::c(i)}}, {-1, {G::c(i + 1), G::s(i)}}}});
    rels.push_back({name("s" + is + " c" + ip + " = c" + is + " s" + is),
                    {{1, {G::s(i), G::c(i + 1)}}, {-1, {G::c(i), G::s(i)}}}});
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      const auto js = std::to_string(j);
      rels.push_back({name("s" + is + " x" + js + " = x" + js + " s" + is),
                      {{1, {G::s(i), G::x(j)}}, {-1, {G::x(j), G::s(i)}}}});
      rels.push_back({name("s" + is + " c" + js + " = c" + js + " s" + is),
                      {{1, {G::s(i), G::c(j)}}, {-1, {G::c(j), G::s(i)}}}});
    }
  }
  for (int i = 1; i <= n; ++i) {
    const auto is = std::to_string(i);
    rels.push_back({name("c" + is + "^2 = 1"), {{1, {G::c(i), G::c(i)}}, {-1, {}}}});
    rels.push_back({name("x" + is + " c" + is + " = -c" + is + " x" + is),
                    {{1, {G::x(i), G::c(i)}}, {1, {G::c(i), G::x(i)}}}});
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const auto js = std::to_string(j);
      rels.push_back({name("x" + is + " c" + js + " = c" + js + " x" + is),
                      {{1, {G::x(i), G::c(j)}}, {-1, {G::c(j), G::x(i)}}}});
      if (i < j) {
        rels.push_back({name("x" + is + " x" + js + " = x" + js + " x" + is),
                        {{1, {G::x(i), G::x(j)}}, {-1, {G::x(j), G::x(i)}}}});
        rels.push_back({name("c" + is + " c" + js + " = -c" + js + " c" + is),
                        {{1, {G::c(i), G::c(j)}}, {1, {G::c(j), G::c(i)}}}});
      }
    }
  }
  check_operators(alg, rels, r);
  finish_count(r);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_cyclotomic_relation(Algebra& alg) {
  const auto& ctx = alg.context();
  auto r = make_report("cyclotomic_relation", ctx);
  r.expected = zero_failures(Provenance::Trivial, "g(x1) = 0 in the cyclotomic quotient");
  Combination g;
  for (int k = 0; k <= ctx.d(); ++k) {
    const Rational a = ctx.coefficient(k);
    if (a != 0) g.push_back({a, x_power(1, k)});
  }
  check_operators(alg, {{"g(x1) = 0", g}}, r);
  finish_count(r);
  return r;
}

VerificationReport check_power_straightening(Algebra& alg, int a_max) {
  const auto start = Clock::now();
  const auto& ctx = alg.context();
  auto r = make_report("power_straightening", ctx);
  r.expected = zero_failures(Provenance::Published, "straightening of s_i past powers of x_i and x_{i+1}");
  std::vector<std::pair<std::string, Combination>> rels;
  for (int i = 1; i < ctx.n(); ++i) {
    const Word si{Generator::s(i)};
    const Word cc{Generator::c(i), Generator::c(i + 1)};
    for (int a = 1; a <= a_max; ++a) {
      Combination first{{1, concat({si, x_power(i, a)})}, {-1, concat({x_power(i + 1, a), si})}};
      Combination second{{1, concat({si, x_power(i + 1, a)})}, {-1, concat({x_power(i, a), si})}};
      for (int k = 0; k < a; ++k) {
        const Word mono = concat({x_power(i, k), x_power(i + 1, a - 1 - k)});
        first.push_back({1, mono});
        first.push_back({k % 2 == 0 ? 1 : -1, concat({mono, cc})});
        second.push_back({-1, mono});
        second.push_back({(a - 1 - k) % 2 == 0 ? 1 : -1, concat({mono, cc})});
      }
      const auto tag = "i=" + std::to_string(i) + " a=" + std::to_string(a);
      rels.push_back({"s_i x_i^a, " + tag, first});
      rels.push_back({"s_i x_{i+1}^a, " + tag, second});
    }
  }
  check_operators(alg, rels, r);
  finish_count(r);
  r.elapsed_ms = ms_since(start);
  return r;
}

std::vector<std::vector<int>> all_reduced_words(const AlgebraContext& ctx, std::uint32_t w) {
  std::map<std::uint32_t, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(std::uint32_t)> rec =
      [&](std::uint32_t u) -> const std::vector<std::vector<int>>& {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (u == 0) {
      out.push_back({});
    } else {
      const auto inv = ctx.permutation(ctx.inverse(u));
      for (int i = 1; i < ctx.n(); ++i) {
        if (inv[i - 1] < inv[i]) continue;
        for (const auto& tail : rec(ctx.left_s(i, u))) {
          std::vector<int> word{i};
          word.insert(word.end(), tail.begin(), tail.end());
          out.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(u, std::move(out)).first->second;
  };
  return rec(w);
}

VerificationReport check_reduced_words(Algebra& alg) {
  const auto start = Clock::now();
  const auto& ctx = alg.context();
  auto r = make_report("reduced_words", ctx);
  r.expected = zero_failures(Provenance::Trivial, "braid relations make every reduced word of w evaluate to w");
  for (std::uint32_t w = 0; w < ctx.perm_count(); ++w) {
    const Element expect = alg.basis(ctx.make_id(0, 0, w));
    for (const auto& word : all_reduced_words(ctx, w)) {
      ++r.cases_tested;
      Element e = alg.one();
      for (auto it = word.rbegin(); it != word.rend(); ++it) e = alg.lmul(Generator::s(*it), e);
      if (!(e == expect)) {
        std::string text;
        for (int i : word) text += (text.empty() ? "s" : " s") + std::to_string(i);
        r.fail(text);
      }
    }
  }
  finish_count(r);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_associativity(Algebra& alg, int samples, std::uint64_t seed) {
  const auto start = Clock::now();
  const auto& ctx = alg.context();
  auto r = make_report("associativity", ctx);
  r.expected = zero_failures(Provenance::Trivial, "multiplication is associative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<BasisId> pick(0, static_cast<BasisId>(ctx.dimension() - 1));
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_element = [&]() {
    Element e = alg.zero();
    for (int t = 0; t < 2; ++t) {
      const int c = coeff(rng);
      e.add_term(pick(rng), c == 0 ? 1 : c);
    }
    return e;
  };
  for (int s = 0; s < samples; ++s) {
    ++r.cases_tested;
    const Element u = random_element();
    const Element v = random_element();
    const Element w = random_element();
    if (!(alg.multiply(alg.multiply(u, v), w) == alg.multiply(u, alg.multiply(v, w)))) {
      std::string witness = "u = ";
      for (const auto& [b, c] : u.terms()) witness += to_string(c) + "*(" + ctx.word_of(b) + ") ";
      witness += "v = ";
      for (const auto& [b, c] : v.terms()) witness += to_string(c) + "*(" + ctx.word_of(b) + ") ";
      witness += "w = ";
      for (const auto& [b, c] : w.terms()) witness += to_string(c) + "*(" + ctx.word_of(b) + ") ";
      r.fail(witness);
    }
  }
  finish_count(r);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport check_integrality(Algebra& alg) {
  const auto& ctx = alg.context();
  auto r = make_report("integral_structure_constants", ctx);
  r.cases_tested = alg.cached_products();
  if (!ctx.integer_coefficients()) {
    r.status = Status::Reported;
    r.computed = "not applicable: rational coefficients";
    return r;
  }
  r.expected = zero_failures(Provenance::Trivial, "the PBW basis is a basis over the integers");
  if (auto w = alg.non_integral_witness()) r.fail(*w);
  finish_count(r);
  return r;
}

// ---------------------------------------------------------------------------
// verify_all

bool VerifyResult::any_failure() const {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
}

VerifyResult verify_all(Algebra& alg, const VerifyOptions& options) {
  const auto& ctx = alg.context();
  const int n = ctx.n();
  const int d = ctx.d();
  const std::size_t dim = ctx.dimension();
  VerifyResult result;
  result.budget_exceeded = dim > options.budget;
  const bool full = !result.budget_exceeded && !options.ranks_only;

  auto push = [&](VerificationReport r) {
    r.sample = options.sample;
    result.reports.push_back(std::move(r));
  };
  auto skip = [&](const std::string& check, const std::string& why) {
    auto r = make_report(check, ctx);
    r.status = Status::Skipped;
    r.computed = "skipped";
    r.note = why;
    push(std::move(r));
  };
  auto rank_row = [&](const std::string& quantity, std::size_t computed, std::optional<Expectation> expected,
                      Status status) {
    result.ranks.rows.push_back({n, d, options.sample, quantity, std::to_string(computed), std::move(expected), status});
  };
  // Asserted comparison of a rank against an expected value.
  auto rank_check = [&](const std::string& check, std::size_t computed, std::size_t expected, Provenance p,
                        const std::string& citation) {
    auto r = make_report(check, ctx);
    r.assert_equal(std::to_string(computed), {std::to_string(expected), p, citation});
    rank_row(check, computed, r.expected, r.status);
    push(std::move(r));
  };
  auto rank_report = [&](const std::string& check, std::size_t computed, std::size_t compared,
                         const std::string& citation, const std::string& relation) {
    auto r = make_report(check, ctx);
    r.status = Status::Reported;
    r.computed = std::to_string(computed);
    r.expected = Expectation{std::to_string(compared), Provenance::Derived, citation};
    r.note = computed == compared ? relation + " holds" : relation + " does not hold";
    rank_row(check, computed, r.expected, Status::Reported);
    push(std::move(r));
  };
  const std::string over_budget = "basis size " + std::to_string(dim) + " exceeds budget " + std::to_string(options.budget);
  const std::string ranks_only = "ranks-only run";
  const std::string why_not_full = result.budget_exceeded ? over_budget : ranks_only;

  // Relations and multiplication sanity.
  if (full) {
    push(check_defining_relations(alg));
    push(check_cyclotomic_relation(alg));
    push(check_power_straightening(alg, d + 1));
    if (n >= 2) push(check_weak_braid(alg, d, d));
    if (n <= 4) push(check_reduced_words(alg));
    push(check_associativity(alg, options.associativity_samples, options.seed));
  } else {
    for (const char* c : {"defining_relations", "cyclotomic_relation", "power_straightening", "weak_braid",
                          "reduced_words", "associativity"})
      skip(c, why_not_full);
  }

  // Trace form.
  if (full && dim <= options.exhaustive_limit) {
    push(check_trace_even(alg));
    const PairTable table(alg);
    push(check_trace_symmetry(alg, table));
    const auto start = Clock::now();
    const Rational det = linalg::determinant(table.matrix());
    auto r = make_report("gram_determinant", ctx);
    r.cases_tested = 1;
    const long k = power_of_two_exponent(det);
    r.computed = "det " + to_string(det) + (k >= 0 ? ", k = " + std::to_string(k) : "");
    if (det == 0) r.fail("Gram matrix is singular");
    if (ctx.integer_coefficients()) {
      r.expected = Expectation{"det = +-2^k", Provenance::Published, "the trace form is nondegenerate over Z[1/2]"};
      if (k < 0) r.fail("determinant " + to_string(det) + " is not a signed power of two");
    } else {
      r.expected = Expectation{"det != 0", Provenance::Published, "the trace form is nondegenerate"};
    }
    if (n == 1 && d == 2 && ctx.coefficients().empty()) {
      r.expected = Expectation{"det -1", Provenance::Derived, "direct computation on the basis 1, x1, c1, c1 x1"};
      if (det != -1) r.fail("expected determinant -1, computed " + to_string(det));
    }
    r.elapsed_ms = ms_since(start);
    push(std::move(r));
  } else if (!full) {
    for (const char* c : {"trace_vanishes_on_odd_part", "trace_symmetry", "gram_determinant"}) skip(c, why_not_full);
  } else {
    for (const char* c : {"trace_vanishes_on_odd_part", "trace_symmetry", "gram_determinant"})
      skip(c, "above exhaustive check size " + std::to_string(options.exhaustive_limit));
  }

  if (full && dim <= options.theta_limit) {
    ThetaTower tower(alg);
    push(check_theta_trace(alg, tower));
    for (int k = 1; k < n; ++k) push(check_theta_conjugation(tower, k));
    for (int k = 1; k <= n; ++k) push(check_theta_bilinear(tower, k, options.bilinear_samples, options.seed + k));
    push(check_conjugated_powers(tower.solver(n)));
  } else {
    skip("theta_trace_agreement", full ? "above theta size " + std::to_string(options.theta_limit) : why_not_full);
  }

  if (full && dim <= options.traceform_limit) {
    const auto start = Clock::now();
    const auto space = even_traceform_space(alg, options.seed);
    auto r = make_report("even_symmetric_forms", ctx);
    r.cases_tested = 1;
    r.computed = "space dimension " + std::to_string(space.dimension) + ", max Gram rank " +
                 std::to_string(space.max_gram_rank) + " of " + std::to_string(dim);
    if (d % 2 == 1) {
      r.expected = Expectation{"max Gram rank " + std::to_string(dim), Provenance::Published,
                               "at odd level the trace form is a symmetrizing form"};
      if (space.max_gram_rank != dim) r.fail("no nondegenerate symmetric form found");
    } else if (n == 1 && d == 2 && ctx.coefficients().empty()) {
      r.expected = Expectation{"max Gram rank < " + std::to_string(dim), Provenance::Published,
                               "every even symmetric form kills x1 at rank one, level two"};
      if (space.max_gram_rank >= dim) r.fail("found a nondegenerate even symmetric form");
      else r.note = "no symmetrizing form exists at even level";
    } else {
      r.status = Status::Reported;
      r.note = space.max_gram_rank < dim ? "no nondegenerate even symmetric form found"
                                         : "a nondegenerate even symmetric form exists";
    }
    r.elapsed_ms = ms_since(start);
    push(std::move(r));
  }

  // Ranks.
  const auto start = Clock::now();
  CommutatorSpace ungraded(alg, false);
  CommutatorSpace graded(alg, true);
  const std::size_t cocenter = ungraded.quotient_rank();
  const std::size_t supercocenter = graded.quotient_rank();
  const std::size_t center = center_even_rank(alg);
  const double rank_ms = ms_since(start);

  if (full && dim <= options.all_pairs_limit) {
    for (const auto* space : {&ungraded, &graded}) {
      const auto t0 = Clock::now();
      const std::size_t oracle = even_commutator_rank_all_pairs(alg, space->graded());
      auto r = make_report(space->graded() ? "graded_commutator_oracle" : "commutator_oracle", ctx);
      r.assert_equal(std::to_string(space->rank()),
                     {std::to_string(oracle), Provenance::Derived, "rank over all ordered basis pairs"});
      r.elapsed_ms = ms_since(t0);
      push(std::move(r));
    }
  }

  const auto tilde = filter_index_set(enum_colored_semibipartitions(n, d), LabelSet::Tilde);
  const auto hat = filter_index_set(enum_colored_semibipartitions(n, d), LabelSet::Hat);
  const IndexSet cocenter_set = d % 2 == 0 ? IndexSet::P0m : IndexSet::Psm;
  {
    auto r = make_report("tilde_set_size", ctx);
    r.assert_equal(std::to_string(tilde.size()),
                   {std::to_string(index_count(ctx, cocenter_set)), Provenance::Derived,
                    d % 2 == 0 ? "bijection with m-multipartitions" : "bijection with strict-part multipartitions"});
    push(std::move(r));
  }
  rank_check("cocenter_rank", cocenter, tilde.size(), Provenance::Derived,
             "even cocenter rank equals the size of the tilde set");
  result.reports.back().elapsed_ms = rank_ms;

  if (full) {
    push(verify_class_basis(alg, LabelSet::Tilde, ungraded));
    push(verify_class_basis(alg, LabelSet::Hat, graded));
  } else {
    skip("class_basis_tilde", why_not_full);
    skip("class_generators_hat", why_not_full);
  }

  if (d % 2 == 1) {
    rank_check("center_even_rank", center, index_count(ctx, IndexSet::Psm), Provenance::Derived,
               "even center rank at odd level counts strict-part multipartitions");
    rank_check("center_cocenter_duality", center, cocenter, Provenance::Published,
               "a symmetric algebra has even center dual to even cocenter");
  } else {
    auto r = make_report("center_even_rank_bound", ctx);
    r.cases_tested = 1;
    r.computed = std::to_string(center);
    r.expected = Expectation{"<= " + std::to_string(hat.size()), Provenance::Published,
                             "the hat set bounds the even center rank at even level"};
    if (center > hat.size()) r.fail("center rank " + std::to_string(center) + " exceeds " + std::to_string(hat.size()));
    rank_row("center_even_rank", center, r.expected, r.status);
    push(std::move(r));
    rank_check("center_supercocenter_duality", center, supercocenter, Provenance::Published,
               "a supersymmetric algebra has even center dual to even supercocenter");
    rank_report("center_vs_conjectured_count", center, index_count(ctx, IndexSet::MP0m),
                "conjectured count of m-multipartitions", "equality");
  }

  if (d == 1) {
    rank_check("supercocenter_rank", supercocenter, strict_even_length(n), Provenance::Derived,
               "strict partitions of n with even length");
  } else {
    const IndexSet conj = d % 2 == 0 ? IndexSet::MP0m : IndexSet::MPsm;
    rank_report("supercocenter_rank", supercocenter, index_count(ctx, conj), "conjectured supercocenter count",
                "equality with the conjectured count");
  }
  {
    auto r = make_report("hat_set_size", ctx);
    r.status = Status::Reported;
    r.computed = std::to_string(hat.size());
    r.note = "supercocenter rank " + std::to_string(supercocenter) + " <= hat size: " +
             (supercocenter <= hat.size() ? "yes" : "no");
    push(std::move(r));
  }

  if (full && dim <= options.center_kernel_limit) {
    auto r = make_report("center_kernel_cross_check", ctx);
    const auto basis = center_even_basis(alg);
    r.assert_equal(std::to_string(basis.size()),
                   {std::to_string(center), Provenance::Derived, "rank-nullity on the stacked adjoint maps"});
    for (const auto& z : basis) {
      for (const auto& g : alg.generators()) {
        ++r.cases_tested;
        if (!(alg.rmul(z, g) == alg.lmul(g, z))) r.fail("kernel element does not commute with " + g.to_string());
      }
    }
    push(std::move(r));
  }

  if (full) push(check_integrality(alg));
  return result;
}

}  // namespace sergeev
