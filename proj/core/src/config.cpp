#include "sergeev/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sergeev {

namespace {

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"enum", "Enumerate index sets, class words and basis size"},
    {"mult", "Normal form of a product of two words"},
    {"trace-check", "Exhaustive (super)symmetry check of the trace form"},
    {"gram", "Gram determinant of the trace form"},
    {"cocenter-rank", "Rank of the even cocenter"},
    {"supercocenter-rank", "Rank of the even supercocenter"},
    {"center-rank", "Rank of the even center"},
    {"verify", "Run the full verification suite"},
};

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "md" || s == "markdown") return OutputFormat::Markdown;
  throw ConfigError("unknown format '" + s + "' (expected json, csv or md)");
}

void apply_config_file(const std::string& path, RunConfig& cfg, std::string& coeff_text, bool& has_coeffs) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must contain a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") cfg.n = value.get<int>();
      else if (key == "d") cfg.d = value.get<int>();
      else if (key == "coeffs") {
        coeff_text = value.get<std::string>();
        has_coeffs = true;
      } else if (key == "random_coeffs") cfg.random_coeffs = value.get<bool>();
      else if (key == "with_monomial") cfg.with_monomial = value.get<bool>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "samples") cfg.samples = value.get<int>();
      else if (key == "budget") cfg.budget = value.get<std::size_t>();
      else if (key == "ranks_only") cfg.ranks_only = value.get<bool>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "format") cfg.format = parse_format(value.get<std::string>());
      else if (key == "timings") cfg.timings = value.get<bool>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.d < 1) throw ConfigError("level must be ≥ 1");
  if (cfg.n < 1) throw ConfigError("rank must be ≥ 1");
  if (cfg.n > 8) throw ConfigError("rank must be ≤ 8");
  if (cfg.samples < 1) throw ConfigError("samples must be ≥ 1");
  if (cfg.budget < 1) throw ConfigError("budget must be ≥ 1");
  for (const auto& [k, a] : cfg.coeffs) {
    if (k < 0 || k > cfg.d) throw ConfigError("coefficient a" + std::to_string(k) + " is outside 0..d");
    if (k == cfg.d && a != 1) throw ConfigError("leading coefficient a" + std::to_string(k) + " is fixed to 1");
    if ((cfg.d - k) % 2 != 0 && a != 0)
      throw ConfigError("coefficient a" + std::to_string(k) + " must vanish (offset parity differs from d)");
  }
  if (cfg.command == "mult" && (cfg.left.empty() || cfg.right.empty()))
    throw ConfigError("mult needs --left and --right words");
}

}  // namespace

AlgebraContext::CoefficientMap parse_coefficients(const std::string& text) {
  AlgebraContext::CoefficientMap out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    const auto eq = item.find('=');
    if (eq == std::string::npos || item.size() < 3 || item[0] != 'a')
      throw ConfigError("malformed coefficient '" + item + "' (expected a<k>=<rational>)");
    const std::string index = item.substr(1, eq - 1);
    if (index.empty() || index.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("malformed coefficient index in '" + item + "'");
    const int k = std::stoi(index);
    if (out.count(k)) throw ConfigError("coefficient a" + index + " given twice");
    try {
      out[k] = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("malformed coefficient value in '" + item + "': " + e.what());
    }
  }
  return out;
}

RunConfig parse_config(int argc, const char* const* argv) {
  CLI::App app{"Exact computations in cyclotomic Sergeev algebras"};
  app.require_subcommand(1, 1);

  int n = 1, d = 1, samples = 3;
  std::uint64_t seed = 1;
  std::size_t budget = 10000;
  std::string coeff_text, out, format = "json", config_path, left, right, inject;
  bool random_coeffs = false, with_monomial = false, timings = false, ranks_only = false, matrix = false;

  auto* o_n = app.add_option("--n", n, "Rank n (>= 1)");
  auto* o_d = app.add_option("--d", d, "Level d (>= 1)");
  auto* o_coeffs = app.add_option("--coeffs", coeff_text, "Coefficients a<k>=<p/q>, comma separated; default g = x^d");
  auto* o_random = app.add_flag("--random-coeffs", random_coeffs, "Draw random rational coefficients");
  auto* o_mono = app.add_flag("--with-monomial", with_monomial, "With --random-coeffs, also run g = x^d");
  auto* o_seed = app.add_option("--seed", seed, "Seed for random coefficients and samples");
  auto* o_samples = app.add_option("--samples", samples, "Number of random coefficient samples");
  auto* o_budget = app.add_option("--budget", budget, "Largest basis size for full checks");
  auto* o_ranks = app.add_flag("--ranks-only", ranks_only, "verify: only the rank computations");
  auto* o_out = app.add_option("--out", out, "Output file (written atomically); default stdout");
  auto* o_format = app.add_option("--format", format, "json, csv or md");
  auto* o_timings = app.add_flag("--timings", timings, "Record elapsed times (output no longer byte-stable)");
  app.add_option("--config", config_path, "JSON config file with defaults");
  app.add_flag("--matrix", matrix, "gram: print the Gram matrix as CSV");
  app.add_option("--left", left, "mult: left word, e.g. \"s1 x1\"");
  app.add_option("--right", right, "mult: right word");
  app.add_option("--inject-failure", inject, "Test mode: corrupt the expected value of this check")->group("");

  for (const auto& [name, desc] : kCommands) app.add_subcommand(name, desc)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  std::string coeffs_source;
  bool has_coeffs = false;
  if (!config_path.empty()) apply_config_file(config_path, cfg, coeffs_source, has_coeffs);

  if (o_n->count()) cfg.n = n;
  if (o_d->count()) cfg.d = d;
  if (o_coeffs->count()) {
    coeffs_source = coeff_text;
    has_coeffs = true;
  }
  if (o_random->count()) cfg.random_coeffs = random_coeffs;
  if (o_mono->count()) cfg.with_monomial = with_monomial;
  if (o_seed->count()) cfg.seed = seed;
  if (o_samples->count()) cfg.samples = samples;
  if (o_budget->count()) cfg.budget = budget;
  if (o_ranks->count()) cfg.ranks_only = ranks_only;
  if (o_out->count()) cfg.out = out;
  if (o_format->count()) cfg.format = parse_format(format);
  if (o_timings->count()) cfg.timings = timings;
  cfg.matrix = matrix;
  cfg.left = left;
  cfg.right = right;
  cfg.inject_failure = inject;

  if (has_coeffs && cfg.random_coeffs)
    throw ConfigError("conflicting coefficient sources: explicit coefficients and random coefficients");
  if (has_coeffs) cfg.coeffs = parse_coefficients(coeffs_source);
  for (auto it = cfg.coeffs.begin(); it != cfg.coeffs.end();) {
    if (it->first != cfg.d && it->second == 0) it = cfg.coeffs.erase(it);
    else ++it;
  }
  cfg.coeffs.erase(cfg.d);
  validate(cfg);
  return cfg;
}

std::vector<CoefficientSample> coefficient_samples(const RunConfig& config) {
  std::vector<CoefficientSample> out;
  if (!config.random_coeffs) {
    out.push_back({config.coeffs.empty() ? "x^d" : "explicit", config.coeffs});
    return out;
  }
  if (config.with_monomial) out.push_back({"x^d", {}});
  std::mt19937_64 rng(config.seed);
  for (int k = 0; k < config.samples; ++k) {
    AlgebraContext::CoefficientMap m;
    for (int offset = config.d - 2; offset >= 0; offset -= 2) {
      const auto pi = static_cast<int>(rng() % 18);
      const int p = pi < 9 ? pi - 9 : pi - 8;
      const int q = static_cast<int>(rng() % 9) + 1;
      m[offset] = Rational(p, q);
      m[offset].canonicalize();
    }
    out.push_back({"seed:" + std::to_string(config.seed) + "#" + std::to_string(k), std::move(m)});
  }
  return out;
}

}  // namespace sergeev
