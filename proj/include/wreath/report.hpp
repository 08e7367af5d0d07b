#pragma once

// Deterministic machine-readable run reports: JSON assembly with a
// config echo, CSV table rendering, and golden-file comparison with
// timestamp normalization.

#include <string>
#include <vector>

#include <json.hpp>

namespace wreath {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

struct Report {
    Json metadata;  // tool, version, timestamp, config echo
    Json results;
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    Json to_json() const;
    // Pretty-printed JSON; identical for identical configs and results.
    std::string to_string() const;
};

// Fresh report with metadata filled in from the effective config.
Report make_report(const std::string& subcommand, const Json& config);

// Replaces every timestamp value with a fixed placeholder so that
// reports from different runs can be compared byte-for-byte.
std::string normalize_timestamps(const std::string& text);

// Byte-level comparison against the golden file after timestamp
// normalization. Returns false on mismatch and describes the first
// differing line in *diff; throws std::runtime_error when the golden
// file cannot be read.
bool golden_compare(const std::string& report_text,
                    const std::string& golden_path,
                    std::string* diff = nullptr);

// RFC4180-style rendering, one line per row, fields joined by commas.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

}  // namespace wreath
