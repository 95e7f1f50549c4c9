#include "rbwkb/reference.hpp"
#include "rbwkb/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace rbwkb {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        out.push_back(trim(field));
    if (!line.empty() && line.back() == ',')
        out.push_back("");
    return out;
}

double to_double(const std::string& s, int line_no) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw config_error("reference table line " + std::to_string(line_no)
                           + ": bad number '" + s + "'");
    return v;
}

const std::set<std::string> OBSERVABLES = {"fine_splitting", "defect", "defect_difference"};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

} // namespace

std::vector<ReferenceRecord> load_references(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open reference table: " + path);

    std::set<std::string> sources;
    bool have_sources = false;
    std::vector<ReferenceRecord> out;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '#') {
            const std::string tag = "# sources:";
            if (!have_sources && t.rfind(tag, 0) == 0) {
                std::istringstream ss(t.substr(tag.size()));
                std::string w;
                while (ss >> w) sources.insert(w);
                have_sources = true;
            }
            continue;
        }
        if (t.rfind("observable", 0) == 0) continue; // column header

        const auto f = split_csv(t);
        if (f.size() != 8)
            throw config_error("reference table line " + std::to_string(line_no)
                               + ": expected 8 fields, got " + std::to_string(f.size()));

        ReferenceRecord rec;
        rec.observable = f[0];
        if (!OBSERVABLES.count(rec.observable))
            throw config_error("reference table line " + std::to_string(line_no)
                               + ": unknown observable '" + rec.observable + "'");
        rec.n = static_cast<int>(to_double(f[1], line_no));
        rec.l = static_cast<int>(to_double(f[2], line_no));
        if (!f[3].empty()) rec.j = to_double(f[3], line_no);
        rec.value = to_double(f[4], line_no);
        if (!f[5].empty()) rec.uncertainty = to_double(f[5], line_no);
        rec.unit = f[6];
        rec.source = f[7];
        if (!have_sources)
            throw config_error("reference table: missing '# sources:' header line");
        if (!sources.count(rec.source))
            throw config_error("reference table line " + std::to_string(line_no)
                               + ": source '" + rec.source + "' not in the declared set");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<ReferenceRecord> select(const std::vector<ReferenceRecord>& refs,
                                    const std::string& observable, int n, int l,
                                    std::optional<double> j) {
    std::vector<ReferenceRecord> out;
    for (const auto& r : refs) {
        if (r.observable != observable || r.n != n || r.l != l) continue;
        if (j && (!r.j || std::fabs(*r.j - *j) > 1e-9)) continue;
        out.push_back(r);
    }
    return out;
}

bool ComparisonReport::all_passed() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](const ComparisonRow& r) { return r.status == RowStatus::fail; });
}

void judge(ComparisonRow& row) {
    if (!row.reference) {
        row.status = RowStatus::omitted;
        return;
    }
    row.abs_dev = std::fabs(row.computed - *row.reference);
    row.rel_dev = *row.reference != 0.0 ? row.abs_dev / std::fabs(*row.reference) : row.abs_dev;
    if (row.tolerance <= 0.0) {
        row.status = RowStatus::omitted; // informational comparison
        return;
    }
    const double metric = row.absolute ? row.abs_dev : row.rel_dev;
    row.status = metric <= row.tolerance ? RowStatus::pass : RowStatus::fail;
}

std::string to_text(const ComparisonReport& rep) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-32s %15s %15s %-14s %10s %12s %-6s %s\n",
                  "row", "computed", "reference", "source", "dev", "tol", "status", "note");
    os << buf;
    for (const auto& r : rep.rows) {
        const char* status = r.status == RowStatus::pass ? "PASS"
                           : r.status == RowStatus::fail ? "FAIL" : "info";
        const std::string ref = r.reference ? fmt("%.8g", *r.reference) : std::string("-");
        const std::string dev = r.reference
            ? fmt("%.2e", r.absolute ? r.abs_dev : r.rel_dev) : std::string("-");
        const std::string tol = r.tolerance > 0.0
            ? fmt("%.1e", r.tolerance) + (r.absolute ? " abs" : " rel") : std::string("-");
        std::snprintf(buf, sizeof buf, "%-32s %15.8g %15s %-14s %10s %12s %-6s %s\n",
                      r.label.c_str(), r.computed, ref.c_str(), r.source.c_str(),
                      dev.c_str(), tol.c_str(), status, r.note.c_str());
        os << buf;
    }
    return os.str();
}

std::string to_csv(const ComparisonReport& rep) {
    std::ostringstream os;
    os << "row,computed,reference,source,abs_dev,rel_dev,tolerance,tolerance_kind,status,note\n";
    for (const auto& r : rep.rows) {
        const char* status = r.status == RowStatus::pass ? "pass"
                           : r.status == RowStatus::fail ? "fail" : "info";
        os << r.label << ',' << fmt("%.10g", r.computed) << ',';
        if (r.reference) os << fmt("%.10g", *r.reference);
        os << ',' << r.source << ',';
        if (r.reference)
            os << fmt("%.4g", r.abs_dev) << ',' << fmt("%.4g", r.rel_dev);
        else
            os << ',';
        os << ',' << (r.tolerance > 0.0 ? fmt("%.3g", r.tolerance) : std::string())
           << ',' << (r.tolerance > 0.0 ? (r.absolute ? "abs" : "rel") : "")
           << ',' << status << ',' << r.note << '\n';
    }
    return os.str();
}

std::string to_json(const ComparisonReport& rep) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        nlohmann::json row;
        row["row"] = r.label;
        row["computed"] = r.computed;
        if (r.reference) row["reference"] = *r.reference;
        row["source"] = r.source;
        if (r.reference) {
            row["abs_dev"] = r.abs_dev;
            row["rel_dev"] = r.rel_dev;
        }
        if (r.tolerance > 0.0) {
            row["tolerance"] = r.tolerance;
            row["tolerance_kind"] = r.absolute ? "abs" : "rel";
        }
        row["status"] = r.status == RowStatus::pass ? "pass"
                      : r.status == RowStatus::fail ? "fail" : "info";
        if (!r.note.empty()) row["note"] = r.note;
        j["rows"].push_back(std::move(row));
    }
    j["all_passed"] = rep.all_passed();
    return j.dump(2) + "\n";
}

} // namespace rbwkb
