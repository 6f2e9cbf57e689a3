#pragma once

#include <iosfwd>
#include <vector>

#include "fpdet/checks.hpp"

namespace fpdet {

enum class RecordFormat { jsonl, csv };

RecordFormat record_format_from_string(const std::string& name);

/// Serialize records and return the number of bytes written.
///   jsonl: one object per line, keys exactly
///          {"check","p","c","d","lhs","rhs","status","notes","ms"}
///   csv:   the same columns with a header row (emitted even when empty)
/// Residues are decimal integers; output is UTF-8. Sink failures raise
/// IoError.
std::size_t write_records(const std::vector<CheckRecord>& records, RecordFormat format,
                          std::ostream& os);

/// Parse back what write_records(jsonl) emitted.
std::vector<CheckRecord> read_records_jsonl(std::istream& is);

}  // namespace fpdet
