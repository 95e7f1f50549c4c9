#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rbwkb {

// One row of the reference table. observable is one of "fine_splitting",
// "defect", "defect_difference"; unit is "MHz" or "1".
struct ReferenceRecord {
    std::string observable;
    int n = 0;
    int l = 0;
    std::optional<double> j;
    double value = 0.0;
    std::optional<double> uncertainty;
    std::string unit;
    std::string source;
};

// CSV loader. The "# sources:" header line declares the closed set of source
// labels; a row with any other label is a config_error, as are unknown
// observables or malformed numbers (errors carry the line number).
std::vector<ReferenceRecord> load_references(const std::string& path);

// Rows matching observable/n/l (and j when given).
std::vector<ReferenceRecord> select(const std::vector<ReferenceRecord>& refs,
                                    const std::string& observable, int n, int l,
                                    std::optional<double> j = std::nullopt);

enum class RowStatus { pass, fail, omitted };

struct ComparisonRow {
    std::string label;                 // e.g. "fine_splitting n=30 l=1"
    double computed = 0.0;
    std::optional<double> reference;   // absent for omitted/informational rows
    std::string source;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;            // 0 marks an informational row
    bool absolute = false;             // tolerance compares abs_dev instead of rel_dev
    RowStatus status = RowStatus::pass;
    std::string note;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    bool all_passed() const;
};

// Fills deviations and pass/fail for a row that has a reference and a
// tolerance; rows without a reference are marked omitted.
void judge(ComparisonRow& row);

// Aligned human-readable table / machine formats. Numeric formatting is
// fixed so repeated runs are byte-identical.
std::string to_text(const ComparisonReport& rep);
std::string to_csv(const ComparisonReport& rep);
std::string to_json(const ComparisonReport& rep);

} // namespace rbwkb
