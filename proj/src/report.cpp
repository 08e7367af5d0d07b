#include "wreath/report.hpp"

#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace wreath {

Json Report::to_json() const {
    Json j;
    j["metadata"] = metadata;
    j["results"] = results;
    j["violations"] = violations;
    j["notes"] = notes;
    return j;
}

std::string Report::to_string() const { return to_json().dump(2) + "\n"; }

Report make_report(const std::string& subcommand, const Json& config) {
    Report r;
    r.metadata["tool"] = "wreathcalc";
    r.metadata["version"] = kToolVersion;
    auto now = std::chrono::system_clock::now();
    r.metadata["timestamp"] = std::to_string(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            now.time_since_epoch())
            .count());
    r.metadata["subcommand"] = subcommand;
    r.metadata["config"] = config;
    r.results = Json::object();
    return r;
}

std::string normalize_timestamps(const std::string& text) {
    static const std::regex ts("(\"timestamp\"\\s*:\\s*)\"[^\"]*\"");
    return std::regex_replace(text, ts, "$1\"<timestamp>\"");
}

bool golden_compare(const std::string& report_text,
                    const std::string& golden_path, std::string* diff) {
    std::ifstream in(golden_path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read golden file: " + golden_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string a = normalize_timestamps(report_text);
    std::string b = normalize_timestamps(buf.str());
    if (a == b) return true;
    if (diff) {
        std::istringstream sa(a), sb(b);
        std::string la, lb;
        int line = 0;
        while (true) {
            ++line;
            bool ga = static_cast<bool>(std::getline(sa, la));
            bool gb = static_cast<bool>(std::getline(sb, lb));
            if (!ga && !gb) {
                *diff = "contents differ only in trailing bytes";
                break;
            }
            if (!ga || !gb || la != lb) {
                *diff = "first difference at line " + std::to_string(line) +
                        ": got \"" + (ga ? la : "<eof>") + "\", golden \"" +
                        (gb ? lb : "<eof>") + "\"";
                break;
            }
        }
    }
    return false;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    auto emit_row = [&os](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            bool quote = row[i].find_first_of(",\"\n") != std::string::npos;
            if (!quote) {
                os << row[i];
            } else {
                os << '"';
                for (char c : row[i]) {
                    if (c == '"') os << '"';
                    os << c;
                }
                os << '"';
            }
        }
        os << "\n";
    };
    emit_row(header);
    for (const auto& r : rows) emit_row(r);
    return os.str();
}

}  // namespace wreath
