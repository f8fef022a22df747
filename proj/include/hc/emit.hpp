// Deterministic text / CSV / JSON emission of classification records and
// sliding rows.  Text tables mirror the papers' field order; CSV headers are
// fixed so the JSON emitter can round-trip them.
#pragma once

#include <string>
#include <vector>

#include "hc/min_triangles.hpp"
#include "hc/sliding_scan.hpp"

namespace hc {

enum class OutputFormat { Text, Csv, Json };
OutputFormat parse_format(const std::string& name);

std::string emit_records_text(const std::vector<MinRecord>& records);
std::string emit_records_csv(const std::vector<MinRecord>& records);
std::string emit_records_json(const std::vector<MinRecord>& records);
std::vector<MinRecord> records_from_json(const std::string& text);

std::string emit_sliding_text(const std::vector<SlidingRow>& rows);
std::string emit_sliding_csv(const std::vector<SlidingRow>& rows);
std::string emit_sliding_json(const std::vector<SlidingRow>& rows);
std::vector<SlidingRow> sliding_from_json(const std::string& text);

std::vector<SlidingRow> rows_from_instances(const std::vector<ScanInstance>& instances);

}  // namespace hc
