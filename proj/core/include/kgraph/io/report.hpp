#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "kgraph/decisions.hpp"
#include "kgraph/io/diagnostic.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/verify.hpp"

namespace kgraph::io {

/// One report entry; the first key is always "type".
using Record = nlohmann::ordered_json;

enum class ReportFormat { Text, Json };

/// Header record {"format":"kgraph-report","version":1,"command":...}.
Record header_record(const std::string& command);
Record validation_record(const Skeleton& skeleton, const std::vector<Violation>& violations);
/// One "check" record per relation, then one "failure" record per failure.
std::vector<Record> check_records(const std::string& suite, const CheckReport& report);
Record equivalence_record(const EquivalenceVerdict& verdict);
Record diagnostic_record(const Diagnostic& d, const std::string& file);
Record summary_record(bool ok, std::size_t failures);

/// JSON: one compact object per line, header first. Text: one line per
/// record, "type key=value ...". Both are byte-stable for equal input.
std::string emit_report(const std::string& command, const std::vector<Record>& records,
                        ReportFormat format);

}  // namespace kgraph::io
