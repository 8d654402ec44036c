#include "gridposet/report.hpp"

#include <json.hpp>

namespace gridposet {

using nlohmann::json;

TableFormat parseTableFormat(const std::string& s) {
    if (s == "json") return TableFormat::Json;
    if (s == "csv") return TableFormat::Csv;
    throw InputError("unknown format '" + s + "' (expected json|csv)");
}

namespace {

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emitTable(const Report& report, TableFormat format, bool canonical) {
    if (format == TableFormat::Json) {
        json rows = json::array();
        for (const ReportRow& r : report.rows) {
            json row{{"instance", r.instance},
                     {"value", r.value},
                     {"expected", r.expected ? json(*r.expected) : json(nullptr)},
                     {"match", r.match ? json(*r.match) : json(nullptr)},
                     {"source", r.source},
                     {"wall_ms", canonical ? 0.0 : r.wallMs}};
            if (!r.note.empty()) row["note"] = r.note;
            rows.push_back(std::move(row));
        }
        json out{{"command", report.command}, {"parameters", report.parameters}, {"rows", rows}};
        return out.dump(2) + "\n";
    }
    std::string out = "instance,value,expected,match,source,wall_ms,note\n";
    for (const ReportRow& r : report.rows) {
        out += csvField(r.instance) + ',' + std::to_string(r.value) + ',';
        out += (r.expected ? std::to_string(*r.expected) : std::string()) + ',';
        out += (r.match ? (*r.match ? "true" : "false") : "null");
        out += ',' + csvField(r.source) + ',';
        out += canonical ? "0" : std::to_string(r.wallMs);
        out += ',' + csvField(r.note) + '\n';
    }
    return out;
}

bool allAssertedRowsMatch(const Report& report) {
    for (const ReportRow& r : report.rows)
        if (r.match && !*r.match) return false;
    return true;
}

}  // namespace gridposet
