#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sergeev/algebra.hpp"

namespace sergeev {

/// Invalid flags, config file contents or parameter values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv, Markdown };

struct RunConfig {
  std::string command;  // enum, mult, trace-check, gram, cocenter-rank, supercocenter-rank, center-rank, verify
  int n = 1;
  int d = 1;
  /// Explicit coefficients; empty map means g = x^d.
  AlgebraContext::CoefficientMap coeffs;
  bool random_coeffs = false;
  bool with_monomial = false;  // random runs also include g = x^d as the first sample
  std::uint64_t seed = 1;
  int samples = 3;
  std::size_t budget = 10000;
  bool ranks_only = false;
  std::string out;  // empty: stdout
  OutputFormat format = OutputFormat::Json;
  bool timings = false;
  bool matrix = false;        // gram: also print the matrix
  std::string left;           // mult: left factor word
  std::string right;          // mult: right factor word
  std::string inject_failure;  // test mode: corrupt the expectation of this check
};

/// "a0=1/2,a2=-3" -> {0: 1/2, 2: -3}. Throws ConfigError on malformed input.
AlgebraContext::CoefficientMap parse_coefficients(const std::string& text);

/// Parses argv (argv[0] is the program name). A --config file supplies
/// defaults that explicit flags override; unknown keys are rejected.
/// Throws ConfigError; help requests throw HelpRequested.
RunConfig parse_config(int argc, const char* const* argv);

struct HelpRequested {
  std::string text;
};

/// One coefficient sample of a run.
struct CoefficientSample {
  std::string label;  // "x^d", "explicit" or "seed:<s>#<k>"
  AlgebraContext::CoefficientMap coeffs;
};

/// Samples in run order. Random coefficients are p/q with p in [-9, 9] \ {0},
/// q in [1, 9], drawn from mt19937_64(seed) in offset order.
std::vector<CoefficientSample> coefficient_samples(const RunConfig& config);

}  // namespace sergeev
