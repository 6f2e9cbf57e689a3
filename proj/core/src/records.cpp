#include "fpdet/records.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fpdet {

RecordFormat record_format_from_string(const std::string& name) {
    if (name == "jsonl") return RecordFormat::jsonl;
    if (name == "csv") return RecordFormat::csv;
    throw UsageError("unknown format: " + name);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::size_t write_records(const std::vector<CheckRecord>& records, RecordFormat format,
                          std::ostream& os) {
    std::size_t bytes = 0;
    if (format == RecordFormat::jsonl) {
        for (const CheckRecord& r : records) {
            nlohmann::ordered_json j;
            j["check"] = r.check;
            j["p"] = r.p;
            j["c"] = r.c;
            j["d"] = r.d;
            j["lhs"] = r.lhs;
            j["rhs"] = r.rhs;
            j["status"] = to_string(r.status);
            j["notes"] = r.notes;
            j["ms"] = r.ms;
            const std::string line = j.dump();
            os << line << '\n';
            bytes += line.size() + 1;
        }
    } else {
        static const std::string header = "check,p,c,d,lhs,rhs,status,notes,ms";
        os << header << '\n';
        bytes += header.size() + 1;
        for (const CheckRecord& r : records) {
            std::ostringstream row;
            row << csv_field(r.check) << ',' << r.p << ',' << r.c << ',' << r.d << ','
                << r.lhs << ',' << r.rhs << ',' << to_string(r.status) << ','
                << csv_field(r.notes) << ',' << r.ms;
            os << row.str() << '\n';
            bytes += row.str().size() + 1;
        }
    }
    os.flush();
    if (!os) throw IoError("write_records: sink write failure");
    return bytes;
}

std::vector<CheckRecord> read_records_jsonl(std::istream& is) {
    std::vector<CheckRecord> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        CheckRecord r;
        r.check = j.at("check").get<std::string>();
        r.p = j.at("p").get<std::uint64_t>();
        r.c = j.at("c").get<std::int64_t>();
        r.d = j.at("d").get<std::int64_t>();
        r.lhs = j.at("lhs").get<std::int64_t>();
        r.rhs = j.at("rhs").get<std::int64_t>();
        r.status = status_from_string(j.at("status").get<std::string>());
        r.notes = j.at("notes").get<std::string>();
        r.ms = j.at("ms").get<std::uint64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace fpdet
