#include "sergeev/report.hpp"

#include <sstream>

namespace sergeev {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json expectation_json(const std::optional<Expectation>& e) {
  if (!e) return nullptr;
  nlohmann::ordered_json j;
  j["value"] = e->value;
  j["provenance"] = to_string(e->provenance);
  j["citation"] = e->citation;
  return j;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Reported:
      return "reported";
    case Status::Skipped:
      return "skipped";
  }
  return "unknown";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Published:
      return "published";
    case Provenance::Trivial:
      return "trivial";
    case Provenance::Derived:
      return "derived";
  }
  return "unknown";
}

void VerificationReport::fail(const std::string& witness) {
  status = Status::Fail;
  ++failure_count;
  if (failures.size() < kMaxWitnesses) failures.push_back(witness);
}

void VerificationReport::assert_equal(const std::string& computed_value, Expectation expectation) {
  computed = computed_value;
  ++cases_tested;
  if (computed_value != expectation.value)
    fail("expected " + expectation.value + ", computed " + computed_value);
  expected = std::move(expectation);
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["n"] = r.n;
  j["d"] = r.d;
  j["coeffs"] = r.coeffs;
  j["sample"] = r.sample;
  j["expected"] = expectation_json(r.expected);
  j["computed"] = r.computed;
  j["status"] = to_string(r.status);
  j["cases_tested"] = r.cases_tested;
  if (r.check == "trace_symmetry") j["pairs_tested"] = r.cases_tested;
  j["failure_count"] = r.failure_count;
  j["failures"] = r.failures;
  if (!r.note.empty()) j["note"] = r.note;
  j["elapsed_ms"] = timings ? static_cast<std::int64_t>(r.elapsed_ms) : 0;
  return j;
}

nlohmann::ordered_json RankTable::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["d"] = row.d;
    j["sample"] = row.sample;
    j["quantity"] = row.quantity;
    j["computed"] = row.computed;
    j["expected"] = expectation_json(row.expected);
    j["status"] = to_string(row.status);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string RankTable::to_csv() const {
  std::ostringstream os;
  os << "n,d,sample,quantity,computed,expected,provenance,citation,status\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.d << ',' << csv_field(row.sample) << ',' << csv_field(row.quantity) << ','
       << csv_field(row.computed) << ',';
    if (row.expected)
      os << csv_field(row.expected->value) << ',' << to_string(row.expected->provenance) << ','
         << csv_field(row.expected->citation);
    else
      os << ",,";
    os << ',' << to_string(row.status) << '\n';
  }
  return os.str();
}

std::string RankTable::to_markdown() const {
  std::ostringstream os;
  os << "| n | d | sample | quantity | computed | expected | provenance | status |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    os << "| " << row.n << " | " << row.d << " | " << row.sample << " | " << row.quantity << " | " << row.computed
       << " | " << (row.expected ? row.expected->value : "") << " | "
       << (row.expected ? to_string(row.expected->provenance) : "") << " | " << to_string(row.status) << " |\n";
  }
  return os.str();
}

}  // namespace sergeev
