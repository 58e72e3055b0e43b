#include "sergeev/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sergeev {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

bool Partition::is_odd() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::is_even() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{current});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

bool passes(const Partition& p, PartitionFilter filter) {
  switch (filter) {
    case PartitionFilter::All: return true;
    case PartitionFilter::Strict: return p.is_strict();
    case PartitionFilter::Odd: return p.is_odd();
    case PartitionFilter::Even: return p.is_even();
  }
  return false;
}

void multipartitions_rec(int remaining, int component, int components, MultiPartition& current,
                         std::vector<MultiPartition>& out) {
  if (component == components - 1) {
    for (auto& p : enum_partitions(remaining)) {
      current.push_back(std::move(p));
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int size = remaining; size >= 0; --size) {
    for (auto& p : enum_partitions(size)) {
      current.push_back(std::move(p));
      multipartitions_rec(remaining - size, component + 1, components, current, out);
      current.pop_back();
    }
  }
}

// Number of m-multipartitions of k for every k <= n.
std::vector<std::uint64_t> multipartition_counts(int n, int m) {
  std::vector<std::uint64_t> single(n + 1, 0);
  for (int k = 0; k <= n; ++k) single[k] = enum_partitions(k).size();
  std::vector<std::uint64_t> acc(n + 1, 0);
  acc[0] = 1;
  for (int c = 0; c < m; ++c) {
    std::vector<std::uint64_t> next(n + 1, 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) next[a + b] += acc[a] * single[b];
    acc = std::move(next);
  }
  return acc;
}

void colorings_rec(const std::vector<int>& lambda, int d, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  const std::size_t i = current.size();
  if (i == lambda.size()) {
    out.push_back(current);
    return;
  }
  int upper = d - 1;
  if (i > 0 && lambda[i] == lambda[i - 1]) upper = std::min(upper, current[i - 1]);
  for (int c = 1; c <= upper; ++c) {
    current.push_back(c);
    colorings_rec(lambda, d, current, out);
    current.pop_back();
  }
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

std::vector<Partition> enum_partitions(int n, PartitionFilter filter) {
  if (n < 0) throw std::invalid_argument("enum_partitions: negative size");
  std::vector<Partition> all;
  std::vector<int> current;
  partitions_rec(n, n, current, all);
  if (filter == PartitionFilter::All) return all;
  std::vector<Partition> out;
  for (auto& p : all)
    if (passes(p, filter)) out.push_back(std::move(p));
  return out;
}

std::vector<MultiPartition> enum_multipartitions(int n, int components) {
  if (n < 0 || components < 0) throw std::invalid_argument("enum_multipartitions: negative argument");
  std::vector<MultiPartition> out;
  if (components == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  MultiPartition current;
  multipartitions_rec(n, 0, components, current, out);
  return out;
}

std::uint64_t count_index_set(int n, int d, IndexSet which) {
  if (d < 1) throw std::invalid_argument("level must be >= 1");
  if (n < 0) throw std::invalid_argument("count_index_set: negative n");
  const int m = d / 2;
  const auto multi = multipartition_counts(n, m);
  switch (which) {
    case IndexSet::P0m:
    case IndexSet::MP0m:
      return multi[n];
    case IndexSet::Psm:
    case IndexSet::MPsm: {
      std::uint64_t total = 0;
      for (int a = 0; a <= n; ++a) {
        std::uint64_t strict = 0;
        for (const auto& p : enum_partitions(a, PartitionFilter::Strict))
          if (which == IndexSet::Psm || p.length() % 2 == 0) ++strict;
        total += strict * multi[n - a];
      }
      return total;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// ColoredSemiBipartition

int ColoredSemiBipartition::size() const {
  return std::accumulate(lambda.begin(), lambda.end(), 0) + mu.size();
}

std::vector<int> ColoredSemiBipartition::bar_alpha() const {
  std::vector<int> out = lambda;
  out.insert(out.end(), mu.parts.begin(), mu.parts.end());
  return out;
}

std::vector<int> ColoredSemiBipartition::epsilon() const {
  std::vector<int> out = colors;
  out.resize(colors.size() + mu.parts.size(), 0);
  return out;
}

std::vector<int> ColoredSemiBipartition::r() const {
  const auto parts = bar_alpha();
  std::vector<int> out{0};
  for (int p : parts) out.push_back(out.back() + p);
  return out;
}

bool ColoredSemiBipartition::is_valid(int d) const {
  if (lambda.size() != colors.size()) return false;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1 || colors[i] < 1 || colors[i] > d - 1) return false;
    if (i > 0) {
      if (lambda[i] < lambda[i - 1]) return false;
      if (lambda[i] == lambda[i - 1] && colors[i] > colors[i - 1]) return false;
    }
  }
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    if (mu.parts[i] < 1) return false;
    if (i > 0 && mu.parts[i] > mu.parts[i - 1]) return false;
  }
  return true;
}

bool ColoredSemiBipartition::in_tilde() const {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if ((lambda[i] + colors[i]) % 2 == 0) return false;
  return mu.is_odd();
}

bool ColoredSemiBipartition::in_hat() const {
  const auto parts = bar_alpha();
  const auto eps = epsilon();
  std::map<int, std::vector<int>> by_even_color;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (eps[i] % 2 == 0) by_even_color[eps[i]].push_back(parts[i]);
  std::size_t even_count = 0;
  for (auto& [color, ps] : by_even_color) {
    even_count += ps.size();
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) return false;
  }
  return even_count % 2 == 0;
}

std::string ColoredSemiBipartition::to_string() const {
  std::ostringstream os;
  os << "(lambda=" << join(lambda) << " colors=" << join(colors) << ", mu=" << join(mu.parts) << ')';
  return os.str();
}

std::vector<ColoredSemiBipartition> enum_colored_semibipartitions(int n, int d) {
  if (d < 1) throw std::invalid_argument("level must be >= 1");
  std::vector<ColoredSemiBipartition> out;
  for (int s = 0; s <= n; ++s) {
    std::vector<std::vector<int>> lambdas;
    for (const auto& p : enum_partitions(s)) {
      std::vector<int> opp(p.parts.rbegin(), p.parts.rend());
      lambdas.push_back(std::move(opp));
    }
    std::sort(lambdas.begin(), lambdas.end());
    const auto mus = enum_partitions(n - s);
    for (const auto& lambda : lambdas) {
      std::vector<std::vector<int>> colorings;
      std::vector<int> current;
      colorings_rec(lambda, d, current, colorings);
      for (const auto& colors : colorings)
        for (const auto& mu : mus) out.push_back({lambda, colors, mu});
    }
  }
  return out;
}

std::vector<ColoredSemiBipartition> filter_index_set(const std::vector<ColoredSemiBipartition>& all,
                                                     LabelSet which) {
  std::vector<ColoredSemiBipartition> out;
  for (const auto& beta : all)
    if (which == LabelSet::Tilde ? beta.in_tilde() : beta.in_hat()) out.push_back(beta);
  return out;
}

MultiPartition theta_bijection(const ColoredSemiBipartition& beta, int d) {
  if (d < 1) throw std::invalid_argument("level must be >= 1");
  MultiPartition out(static_cast<std::size_t>(d));
  out[0] = beta.mu;
  for (std::size_t i = 0; i < beta.lambda.size(); ++i) {
    const int c = beta.colors[i];
    if (c < 1 || c >= d) throw std::invalid_argument("color out of range for level");
    out[static_cast<std::size_t>(c)].parts.push_back(beta.lambda[i]);
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    std::sort(out[i].parts.begin(), out[i].parts.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------
// Words

int GeneratorWord::length() const {
  int total = 0;
  for (const auto& t : tokens) total += t.weight();
  return total;
}

std::string GeneratorWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) os << ' ';
    const auto& t = tokens[i];
    switch (t.kind) {
      case TokenKind::S0:
        os << "s0";
        if (t.value != 1) os << '^' << t.value;
        break;
      case TokenKind::S: os << 's' << t.value; break;
      case TokenKind::X: os << 'x' << t.value; break;
      case TokenKind::C: os << 'c' << t.value; break;
    }
  }
  return os.str();
}

GeneratorWord parse_word(const std::string& text) {
  GeneratorWord word;
  std::istringstream is(text);
  std::string tok;
  auto parse_positive = [&](const std::string& digits, const std::string& whole) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("malformed word token '" + whole + "'");
    return std::stoi(digits);
  };
  while (is >> tok) {
    if (tok.size() < 2) throw std::invalid_argument("malformed word token '" + tok + "'");
    const char letter = tok[0];
    std::string rest = tok.substr(1);
    int power = 1;
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      power = parse_positive(rest.substr(caret + 1), tok);
      rest = rest.substr(0, caret);
    }
    const int index = parse_positive(rest, tok);
    if (power < 1) throw std::invalid_argument("exponent must be >= 1 in '" + tok + "'");
    switch (letter) {
      case 's':
        if (index == 0) {
          word.tokens.push_back(Token::s0(power));
        } else {
          for (int p = 0; p < power; ++p) word.tokens.push_back(Token::s(index));
        }
        break;
      case 'x':
        if (index == 0) throw std::invalid_argument("x indices start at 1 in '" + tok + "'");
        for (int p = 0; p < power; ++p) word.tokens.push_back(Token::x(index));
        break;
      case 'c':
        if (index == 0) throw std::invalid_argument("c indices start at 1 in '" + tok + "'");
        for (int p = 0; p < power; ++p) word.tokens.push_back(Token::c(index));
        break;
      default:
        throw std::invalid_argument("unknown generator in '" + tok + "'");
    }
  }
  return word;
}

GeneratorWord minimal_word(const ColoredSemiBipartition& beta) {
  GeneratorWord word;
  const auto eps = beta.epsilon();
  const auto r = beta.r();
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const int start = r[i];
    const int end = r[i + 1];
    if (eps[i] != 0) {
      for (int k = start; k >= 1; --k) word.tokens.push_back(Token::s(k));
      word.tokens.push_back(Token::s0(eps[i]));
      for (int k = 1; k <= start; ++k) word.tokens.push_back(Token::s(k));
    }
    for (int k = start + 1; k <= end - 1; ++k) word.tokens.push_back(Token::s(k));
  }
  return word;
}

DecoratedWord clifford_decorated_word(const ColoredSemiBipartition& beta) {
  if (!beta.in_hat())
    throw std::invalid_argument("clifford_decorated_word: " + beta.to_string() + " is not in the hat set");
  DecoratedWord out{minimal_word(beta), {}};
  const auto eps = beta.epsilon();
  const auto r = beta.r();
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i] % 2 == 0) out.mask.push_back(r[i + 1]);
  return out;
}

}  // namespace sergeev
