#include "kgraph/io/report.hpp"

#include <sstream>

#include "kgraph/io/graph_file.hpp"

namespace kgraph::io {

namespace {

Record typed(const char* type) {
  Record r;
  r["type"] = type;
  return r;
}

std::string text_value(const Record& v) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (!s.empty() && s.find_first_of(" \t\"=") == std::string::npos) return s;
  }
  return v.dump();
}

}  // namespace

Record header_record(const std::string& command) {
  Record r;
  r["format"] = "kgraph-report";
  r["version"] = 1;
  r["command"] = command;
  return r;
}

Record validation_record(const Skeleton& skeleton, const std::vector<Violation>& violations) {
  Record r = typed("validation");
  r["valid"] = violations.empty();
  r["rank"] = skeleton.rank();
  r["vertices"] = skeleton.vertices().size();
  r["edges"] = skeleton.edges().size();
  r["squares"] = skeleton.squares().size();
  Record list = Record::array();
  for (const Violation& v : violations) {
    Record item;
    item["kind"] = violation_code(v);
    item["message"] = describe(skeleton, v);
    list.push_back(std::move(item));
  }
  r["violations"] = std::move(list);
  return r;
}

std::vector<Record> check_records(const std::string& suite, const CheckReport& report) {
  std::vector<Record> out;
  for (const auto& [relation, tally] : report.tallies()) {
    Record r = typed("check");
    r["suite"] = suite;
    r["relation"] = relation;
    r["passed"] = tally.passed;
    r["failed"] = tally.failed;
    out.push_back(std::move(r));
  }
  for (const CheckFailure& f : report.failures()) {
    Record r = typed("failure");
    r["suite"] = suite;
    r["relation"] = f.relation;
    r["instance"] = f.instance;
    r["witness"] = f.witness;
    out.push_back(std::move(r));
  }
  return out;
}

Record equivalence_record(const EquivalenceVerdict& verdict) {
  Record r = typed("equivalence");
  r["equivalent"] = verdict.equivalent;
  if (!verdict.equivalent) r["reason"] = verdict.reason;
  r["matched_orbits"] = verdict.matched.size();
  Record pairs = Record::array();
  for (auto [a, b] : verdict.matched) pairs.push_back(Record::array({a + 1, b + 1}));
  r["matched"] = std::move(pairs);
  return r;
}

Record diagnostic_record(const Diagnostic& d, const std::string& file) {
  Record r = typed("diagnostic");
  r["severity"] = d.severity == Severity::Error ? "error" : "warning";
  r["file"] = file;
  r["line"] = d.line;
  r["column"] = d.column;
  r["code"] = d.code;
  r["message"] = d.message;
  return r;
}

Record summary_record(bool ok, std::size_t failures) {
  Record r = typed("summary");
  r["ok"] = ok;
  r["failures"] = failures;
  return r;
}

std::string emit_report(const std::string& command, const std::vector<Record>& records,
                        ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Json) {
    out << header_record(command).dump() << "\n";
    for (const Record& r : records) out << r.dump() << "\n";
    return out.str();
  }
  out << "kgraph-report v1 " << command << "\n";
  for (const Record& r : records) {
    bool first = true;
    for (const auto& [key, value] : r.items()) {
      if (first) {
        out << text_value(value);
        first = false;
        continue;
      }
      out << " " << key << "=" << text_value(value);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace kgraph::io
