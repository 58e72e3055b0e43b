#include "sergeev/suite.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "sergeev/trace_form.hpp"

namespace sergeev {

namespace {

using json = nlohmann::ordered_json;

struct SampleAlgebra {
  CoefficientSample sample;
  std::unique_ptr<Algebra> algebra;
};

std::vector<SampleAlgebra> build_samples(const RunConfig& cfg) {
  std::vector<SampleAlgebra> out;
  for (auto& s : coefficient_samples(cfg)) {
    try {
      auto alg = std::make_unique<Algebra>(AlgebraContext::create(cfg.n, cfg.d, s.coeffs));
      out.push_back({std::move(s), std::move(alg)});
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

json header(const RunConfig& cfg) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = cfg.command;
  j["n"] = cfg.n;
  j["d"] = cfg.d;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join_words(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

// ---------------------------------------------------------------------------

json beta_json(const ColoredSemiBipartition& b) {
  json j;
  j["label"] = b.to_string();
  auto lambda = json::array();
  for (std::size_t i = 0; i < b.lambda.size(); ++i) lambda.push_back({{"part", b.lambda[i]}, {"color", b.colors[i]}});
  j["lambda"] = lambda;
  j["mu"] = b.mu.parts;
  return j;
}

SuiteOutcome run_enum(const RunConfig& cfg) {
  const auto all = enum_colored_semibipartitions(cfg.n, cfg.d);
  const auto tilde = filter_index_set(all, LabelSet::Tilde);
  const auto hat = filter_index_set(all, LabelSet::Hat);
  const auto ctx = AlgebraContext::create(cfg.n, cfg.d);
  SuiteOutcome o;
  if (cfg.format == OutputFormat::Json) {
    json j = header(cfg);
    j["dimension"] = ctx->dimension();
    j["even_dimension"] = even_dimension(*ctx);
    json counts;
    counts["P0m"] = count_index_set(cfg.n, cfg.d, IndexSet::P0m);
    counts["Psm"] = count_index_set(cfg.n, cfg.d, IndexSet::Psm);
    counts["MP0m"] = count_index_set(cfg.n, cfg.d, IndexSet::MP0m);
    counts["MPsm"] = count_index_set(cfg.n, cfg.d, IndexSet::MPsm);
    counts["colored_semibipartitions"] = all.size();
    counts["tilde"] = tilde.size();
    counts["hat"] = hat.size();
    j["counts"] = counts;
    auto t = json::array();
    for (const auto& b : tilde) {
      json e = beta_json(b);
      e["word"] = minimal_word(b).to_string();
      auto mp = json::array();
      for (const auto& part : theta_bijection(b, cfg.d)) mp.push_back(part.parts);
      e["multipartition"] = mp;
      t.push_back(e);
    }
    j["tilde"] = t;
    auto h = json::array();
    for (const auto& b : hat) {
      const auto dw = clifford_decorated_word(b);
      json e = beta_json(b);
      e["word"] = dw.word.to_string();
      e["mask"] = dw.mask;
      h.push_back(e);
    }
    j["hat"] = h;
    o.output = dump(j);
  } else {
    std::ostringstream os;
    const bool csv = cfg.format == OutputFormat::Csv;
    os << (csv ? "set,beta,word,mask\n" : "| set | beta | word | mask |\n|---|---|---|---|\n");
    auto row = [&](const std::string& set, const ColoredSemiBipartition& b, const GeneratorWord& w,
                   const std::vector<int>& mask) {
      if (csv)
        os << set << ",\"" << b.to_string() << "\"," << w.to_string() << ",\"" << join_words(mask) << "\"\n";
      else
        os << "| " << set << " | " << b.to_string() << " | " << w.to_string() << " | " << join_words(mask) << " |\n";
    };
    for (const auto& b : tilde) row("tilde", b, minimal_word(b), {});
    for (const auto& b : hat) {
      const auto dw = clifford_decorated_word(b);
      row("hat", b, dw.word, dw.mask);
    }
    o.output = os.str();
  }
  return o;
}

SuiteOutcome run_mult(const RunConfig& cfg) {
  GeneratorWord left, right;
  try {
    left = parse_word(cfg.left);
    right = parse_word(cfg.right);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  auto samples = build_samples(cfg);
  json j = header(cfg);
  j["left"] = left.to_string();
  j["right"] = right.to_string();
  auto arr = json::array();
  std::ostringstream text;
  if (cfg.format == OutputFormat::Csv) text << "sample,coeff,basis,word\n";
  for (auto& s : samples) {
    Algebra& alg = *s.algebra;
    Element product;
    try {
      product = alg.multiply(alg.evaluate(left), alg.evaluate(right));
    } catch (const std::out_of_range& e) {
      throw ConfigError(e.what());
    }
    json e;
    e["sample"] = s.sample.label;
    e["coeffs"] = alg.context().coefficients_string();
    auto terms = json::array();
    for (const auto& [b, c] : product.terms()) {
      json t;
      t["coeff"] = to_string(c);
      t["basis"] = alg.context().describe(b);
      t["word"] = alg.context().word_of(b);
      terms.push_back(t);
      if (cfg.format == OutputFormat::Csv)
        text << s.sample.label << ',' << to_string(c) << ",\"" << alg.context().describe(b) << "\"," << alg.context().word_of(b)
             << '\n';
    }
    e["terms"] = terms;
    if (cfg.format == OutputFormat::Markdown)
      text << "**" << s.sample.label << "**\n\n```\n" << format_element(alg.context(), product) << "```\n";
    arr.push_back(e);
  }
  j["products"] = arr;
  return {kExitPass, cfg.format == OutputFormat::Json ? dump(j) : text.str()};
}

std::string reports_markdown(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "| check | sample | status | computed | expected | note |\n|---|---|---|---|---|---|\n";
  for (const auto& r : reports)
    os << "| " << r.check << " | " << r.sample << " | " << to_string(r.status) << " | " << r.computed << " | "
       << (r.expected ? r.expected->value : "") << " | " << (r.failures.empty() ? r.note : r.failures.front())
       << " |\n";
  return os.str();
}

std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "check,n,d,sample,status,computed,expected,failure_count\n";
  for (const auto& r : reports)
    os << r.check << ',' << r.n << ',' << r.d << ',' << r.sample << ',' << to_string(r.status) << ",\"" << r.computed
       << "\",\"" << (r.expected ? r.expected->value : "") << "\"," << r.failure_count << '\n';
  return os.str();
}

int exit_for(const std::vector<VerificationReport>& reports, bool budget) {
  for (const auto& r : reports)
    if (r.failed()) return kExitFailure;
  return budget ? kExitBudget : kExitPass;
}

void inject(std::vector<VerificationReport>& reports, const std::string& check) {
  if (check.empty()) return;
  for (auto& r : reports) {
    if (r.check != check || !r.asserted()) continue;
    const std::string original = r.expected ? r.expected->value : "";
    if (!r.expected) r.expected = Expectation{};
    r.expected->value = "injected<" + original + ">";
    r.fail("injected expectation " + r.expected->value + " does not match computed " + r.computed);
  }
}

SuiteOutcome render_reports(const RunConfig& cfg, std::vector<VerificationReport> reports, bool budget) {
  inject(reports, cfg.inject_failure);
  const int code = exit_for(reports, budget);
  if (cfg.format == OutputFormat::Csv) return {code, reports_csv(reports)};
  if (cfg.format == OutputFormat::Markdown) return {code, reports_markdown(reports)};
  json j = header(cfg);
  auto arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, cfg.timings));
  j["reports"] = arr;
  j["exit_code"] = code;
  return {code, dump(j)};
}

SuiteOutcome run_trace_check(const RunConfig& cfg) {
  auto samples = build_samples(cfg);
  std::vector<VerificationReport> reports;
  bool budget = false;
  for (auto& s : samples) {
    VerificationReport r;
    if (s.algebra->dimension() > cfg.budget) {
      budget = true;
      r.check = "trace_symmetry";
      r.n = cfg.n;
      r.d = cfg.d;
      r.coeffs = s.algebra->context().coefficients_string();
      r.status = Status::Skipped;
      r.computed = "skipped";
      r.note = "basis size " + std::to_string(s.algebra->dimension()) + " exceeds budget " + std::to_string(cfg.budget);
    } else {
      r = check_trace_symmetry(*s.algebra);
    }
    r.sample = s.sample.label;
    reports.push_back(std::move(r));
  }
  return render_reports(cfg, std::move(reports), budget);
}

SuiteOutcome run_gram(const RunConfig& cfg) {
  auto samples = build_samples(cfg);
  json j = header(cfg);
  auto arr = json::array();
  std::ostringstream text;
  int code = kExitPass;
  for (auto& s : samples) {
    Algebra& alg = *s.algebra;
    json e;
    e["sample"] = s.sample.label;
    e["coeffs"] = alg.context().coefficients_string();
    e["dimension"] = alg.dimension();
    if (alg.dimension() > cfg.budget) {
      e["status"] = "skipped";
      e["note"] = "basis size exceeds budget";
      if (code == kExitPass) code = kExitBudget;
      arr.push_back(e);
      continue;
    }
    const auto g = gram_matrix(alg);
    const Rational det = linalg::determinant(g);
    const long k = power_of_two_exponent(det);
    e["determinant"] = to_string(det);
    e["power_of_two_exponent"] = k >= 0 ? json(k) : json(nullptr);
    bool ok = det != 0 && (!alg.context().integer_coefficients() || k >= 0);
    e["status"] = ok ? "pass" : "fail";
    if (!ok) code = kExitFailure;
    if (cfg.matrix) {
      auto rows = json::array();
      for (std::size_t r = 0; r < g.rows(); ++r) {
        auto row = json::array();
        for (const auto& v : g.row(r).to_dense()) row.push_back(to_string(v));
        rows.push_back(row);
      }
      e["matrix"] = rows;
    }
    if (cfg.format != OutputFormat::Json) {
      text << "# sample " << s.sample.label << " determinant " << to_string(det) << '\n';
      if (cfg.matrix) {
        for (std::size_t r = 0; r < g.rows(); ++r) {
          const auto dense = g.row(r).to_dense();
          for (std::size_t c = 0; c < dense.size(); ++c) text << (c ? "," : "") << to_string(dense[c]);
          text << '\n';
        }
      }
    }
    arr.push_back(e);
  }
  j["samples"] = arr;
  j["exit_code"] = code;
  return {code, cfg.format == OutputFormat::Json ? dump(j) : text.str()};
}

SuiteOutcome run_rank(const RunConfig& cfg) {
  auto samples = build_samples(cfg);
  std::vector<VerificationReport> reports;
  const int d = cfg.d;
  for (auto& s : samples) {
    Algebra& alg = *s.algebra;
    const auto& ctx = alg.context();
    VerificationReport r;
    r.n = cfg.n;
    r.d = d;
    r.coeffs = ctx.coefficients_string();
    r.sample = s.sample.label;
    if (cfg.command == "cocenter-rank") {
      r.check = "cocenter_rank";
      const auto tilde = filter_index_set(enum_colored_semibipartitions(cfg.n, d), LabelSet::Tilde);
      r.assert_equal(std::to_string(cocenter_rank(alg)),
                     {std::to_string(tilde.size()), Provenance::Derived, "size of the tilde set"});
    } else if (cfg.command == "supercocenter-rank") {
      r.check = "supercocenter_rank";
      const std::size_t rank = supercocenter_rank(alg);
      if (d == 1) {
        std::size_t strict = 0;
        for (const auto& p : enum_partitions(cfg.n, PartitionFilter::Strict))
          if (p.length() % 2 == 0) ++strict;
        r.assert_equal(std::to_string(rank),
                       {std::to_string(strict), Provenance::Derived, "strict partitions of n with even length"});
      } else {
        const auto set = d % 2 == 0 ? IndexSet::MP0m : IndexSet::MPsm;
        r.status = Status::Reported;
        r.computed = std::to_string(rank);
        r.expected = Expectation{std::to_string(count_index_set(cfg.n, d, set)), Provenance::Derived,
                                 "conjectured supercocenter count"};
      }
    } else {
      r.check = "center_even_rank";
      const std::size_t rank = center_even_rank(alg);
      if (d % 2 == 1) {
        r.assert_equal(std::to_string(rank), {std::to_string(count_index_set(cfg.n, d, IndexSet::Psm)),
                                              Provenance::Derived, "strict-part multipartitions"});
      } else {
        const auto hat = filter_index_set(enum_colored_semibipartitions(cfg.n, d), LabelSet::Hat);
        r.computed = std::to_string(rank);
        r.cases_tested = 1;
        r.expected = Expectation{"<= " + std::to_string(hat.size()), Provenance::Published, "size of the hat set"};
        if (rank > hat.size()) r.fail("rank exceeds the hat set size");
        r.note = "conjectured count " + std::to_string(count_index_set(cfg.n, d, IndexSet::MP0m));
      }
    }
    reports.push_back(std::move(r));
  }
  return render_reports(cfg, std::move(reports), false);
}

SuiteOutcome run_verify(const RunConfig& cfg) {
  auto samples = build_samples(cfg);
  VerifyOptions opts;
  opts.budget = cfg.budget;
  opts.ranks_only = cfg.ranks_only;
  opts.seed = cfg.seed;

  std::vector<VerificationReport> all;
  std::vector<VerifyResult> results;
  RankTable table;
  bool budget = false;
  for (auto& s : samples) {
    opts.sample = s.sample.label;
    auto res = verify_all(*s.algebra, opts);
    budget = budget || res.budget_exceeded;
    for (const auto& r : res.reports) all.push_back(r);
    for (const auto& row : res.ranks.rows) table.rows.push_back(row);
    results.push_back(std::move(res));
  }

  // Stability of ranks across samples.
  if (samples.size() > 1) {
    for (const char* quantity : {"cocenter_rank", "center_even_rank", "supercocenter_rank"}) {
      std::vector<std::pair<std::string, std::string>> values;
      for (const auto& row : table.rows)
        if (row.quantity == quantity) values.push_back({row.sample, row.computed});
      if (values.size() < 2) continue;
      VerificationReport r;
      r.check = std::string("rank_stability:") + quantity;
      r.n = cfg.n;
      r.d = cfg.d;
      r.sample = "all";
      r.expected = Expectation{values.front().second + " for every sample", Provenance::Published,
                               "ranks do not depend on the cyclotomic coefficients"};
      std::string computed;
      for (const auto& [label, v] : values) {
        ++r.cases_tested;
        computed += (computed.empty() ? "" : ",") + v;
        if (v != values.front().second)
          r.fail(label + " gives " + v + " but " + values.front().first + " gives " + values.front().second);
      }
      r.computed = computed;
      all.push_back(std::move(r));
    }
  }

  inject(all, cfg.inject_failure);
  const int code = exit_for(all, budget);

  if (cfg.format == OutputFormat::Csv) return {code, table.to_csv()};
  if (cfg.format == OutputFormat::Markdown)
    return {code, "## Ranks\n\n" + table.to_markdown() + "\n## Checks\n\n" + reports_markdown(all)};

  json j = header(cfg);
  json config;
  config["coefficient_source"] = cfg.random_coeffs ? "random" : (cfg.coeffs.empty() ? "x^d" : "explicit");
  config["seed"] = cfg.seed;
  config["samples"] = samples.size();
  config["budget"] = cfg.budget;
  config["ranks_only"] = cfg.ranks_only;
  j["config"] = config;
  auto sample_arr = json::array();
  for (const auto& s : samples) {
    json e;
    e["sample"] = s.sample.label;
    e["coeffs"] = s.algebra->context().coefficients_string();
    e["dimension"] = s.algebra->dimension();
    sample_arr.push_back(e);
  }
  j["samples"] = sample_arr;
  auto arr = json::array();
  std::map<std::string, int> summary{{"pass", 0}, {"fail", 0}, {"reported", 0}, {"skipped", 0}};
  for (const auto& r : all) {
    arr.push_back(to_json(r, cfg.timings));
    ++summary[to_string(r.status)];
  }
  j["reports"] = arr;
  j["rank_table"] = table.to_json();
  json sum;
  for (const char* k : {"pass", "fail", "reported", "skipped"}) sum[k] = summary[k];
  j["summary"] = sum;
  j["budget_exceeded"] = budget;
  j["exit_code"] = code;
  return {code, dump(j)};
}

}  // namespace

SuiteOutcome run_command(const RunConfig& cfg) {
  if (cfg.command == "enum") return run_enum(cfg);
  if (cfg.command == "mult") return run_mult(cfg);
  if (cfg.command == "trace-check") return run_trace_check(cfg);
  if (cfg.command == "gram") return run_gram(cfg);
  if (cfg.command == "cocenter-rank" || cfg.command == "supercocenter-rank" || cfg.command == "center-rank")
    return run_rank(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot move report to '" + path + "': " + ec.message());
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitPass;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  SuiteOutcome outcome;
  try {
    outcome = run_command(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (cfg.out.empty()) {
    out << outcome.output;
  } else {
    try {
      write_atomically(cfg.out, outcome.output);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitIo;
    }
  }
  for (const auto& line : {outcome.exit_code}) {
    if (line == kExitFailure) err << "verification failed; see report for witnesses\n";
    if (line == kExitBudget) err << "partial run: some checks skipped for budget\n";
  }
  return outcome.exit_code;
}

}  // namespace sergeev
