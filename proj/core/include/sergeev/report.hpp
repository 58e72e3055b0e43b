#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sergeev {

inline constexpr const char* kReportSchema = "sergeev-report/1";

enum class Status { Pass, Fail, Reported, Skipped };

/// Where an expected value comes from: stated in the literature, immediate
/// from definitions, or computed here by an independent method.
enum class Provenance { Published, Trivial, Derived };

std::string to_string(Status s);
std::string to_string(Provenance p);

struct Expectation {
  std::string value;
  Provenance provenance = Provenance::Derived;
  std::string citation;
};

/// Outcome of one check on one parameter point.
struct VerificationReport {
  std::string check;
  int n = 0;
  int d = 0;
  std::string coeffs;  // "a0=..,a2=.." or "" for g = x^d
  std::string sample;  // "x^d" or "seed:<s>#<k>"
  std::optional<Expectation> expected;
  std::string computed;
  Status status = Status::Pass;
  std::uint64_t cases_tested = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // reproducible witnesses, first few only
  std::string note;
  double elapsed_ms = 0;

  static constexpr std::size_t kMaxWitnesses = 10;

  /// Records a failure; status becomes Fail.
  void fail(const std::string& witness);
  /// Asserts computed == expected (string comparison of canonical forms).
  void assert_equal(const std::string& computed_value, Expectation expectation);
  bool asserted() const { return status == Status::Pass || status == Status::Fail; }
  bool failed() const { return status == Status::Fail; }
};

nlohmann::ordered_json to_json(const VerificationReport& r, bool timings);

struct RankRow {
  int n = 0;
  int d = 0;
  std::string sample;
  std::string quantity;
  std::string computed;
  std::optional<Expectation> expected;
  Status status = Status::Reported;
};

struct RankTable {
  std::vector<RankRow> rows;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  std::string to_markdown() const;
};

}  // namespace sergeev
