#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridposet/common.hpp"

namespace gridposet {

/// One instance of a reproduction table. `match` is absent for rows that are
/// observations rather than assertions (conjecture rows).
struct ReportRow {
    std::string instance;  // "k=3,l=4" style parameter echo
    long long value = 0;
    std::optional<long long> expected;
    std::optional<bool> match;
    std::string source;  // formula reference tag or "derived"
    double wallMs = 0.0;
    std::string note;
};

struct Report {
    std::string command;     // command echo
    std::string parameters;  // parameter grid echo
    std::vector<ReportRow> rows;
};

enum class TableFormat { Json, Csv };

TableFormat parseTableFormat(const std::string& s);

/// CSV has a header row; JSON is a single object. With canonical=true the
/// output is byte-stable across runs (wall times zeroed).
std::string emitTable(const Report& report, TableFormat format, bool canonical);

/// True iff every row that asserts (match present) matches.
bool allAssertedRowsMatch(const Report& report);

}  // namespace gridposet
