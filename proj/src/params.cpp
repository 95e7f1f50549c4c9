#include "rbwkb/params.hpp"
#include "rbwkb/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef RBWKB_DATA_DIR_DEFAULT
#define RBWKB_DATA_DIR_DEFAULT "data"
#endif

namespace rbwkb {

double ModelParams::r_so_at(int l) const {
    auto it = r_so.find(l);
    if (it == r_so.end())
        throw config_error("no spin-orbit cutoff configured for l=" + std::to_string(l)
                           + " (missing key r_so_" + std::to_string(l) + ")");
    return it->second;
}

ModelParams ModelParams::pure_coulomb() {
    ModelParams p;
    p.Z = 1;
    for (auto& row : p.rows) {
        row.a1 = 1.0; // irrelevant: multiplies (Z - 1) = 0
        row.a2 = 1.0;
        row.a3 = 0.0;
        row.a4 = 0.0;
        row.r_c = 1.0;
    }
    p.alpha_c = 0.0;
    p.a3_scale = {1.0, 1.0, 1.0, 1.0};
    // Cutoffs so that spin-orbit channels stay usable; for the Coulomb
    // potential the coupling is the plain hydrogenic 2 alpha^2 g / r^3.
    p.r_so = {{1, 0.05}, {2, 0.25}};
    return p;
}

void check_channel(const Channel& ch) {
    if (ch.l < 0)
        throw config_error("channel: l must be >= 0");
    const double dj = ch.j - ch.l;
    if (ch.j <= 0.0 || (std::fabs(dj - 0.5) > 1e-12 && std::fabs(dj + 0.5) > 1e-12))
        throw config_error("channel: j must be l +/- 1/2 and positive");
}

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& text, const std::string& key, int line_no) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw config_error("bad numeric value for key '" + key + "' on line "
                           + std::to_string(line_no) + ": '" + t + "'");
    return v;
}

int parse_suffix_int(const std::string& key, size_t prefix_len, int line_no) {
    const std::string t = key.substr(prefix_len);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size() || v < 0)
        throw config_error("bad l suffix in key '" + key + "' on line " + std::to_string(line_no));
    return static_cast<int>(v);
}

} // namespace

ModelParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open parameter file: " + path);

    ModelParams p;
    std::string section;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("unterminated section header on line " + std::to_string(line_no));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("expected key = value on line " + std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = line.substr(eq + 1);
        const double num = parse_number(val, key, line_no);
        seen.insert(section + "/" + key);

        if (section == "global") {
            if (key == "Z") p.Z = static_cast<int>(num);
            else if (key == "alpha_c") p.alpha_c = num;
            else if (key == "alpha_fs") p.alpha_fs = num;
            else throw config_error("unknown key '" + key + "' in section [global]");
        } else if (section.rfind("l=", 0) == 0) {
            const int l = parse_suffix_int(section, 2, line_no);
            if (l > 3)
                throw config_error("section [" + section + "]: rows are stored for l = 0..3 only");
            CoreRow& row = p.rows[static_cast<size_t>(l)];
            if (key == "a1") row.a1 = num;
            else if (key == "a2") row.a2 = num;
            else if (key == "a3") row.a3 = num;
            else if (key == "a4") row.a4 = num;
            else if (key == "r_c") row.r_c = num;
            else throw config_error("unknown key '" + key + "' in section [" + section + "]");
        } else if (section == "cutoffs") {
            if (key.rfind("r_so_", 0) != 0)
                throw config_error("unknown key '" + key + "' in section [cutoffs]");
            p.r_so[parse_suffix_int(key, 5, line_no)] = num;
        } else if (section == "scaling") {
            if (key.rfind("a3_scale_", 0) != 0)
                throw config_error("unknown key '" + key + "' in section [scaling]");
            const int l = parse_suffix_int(key, 9, line_no);
            if (l > 3)
                throw config_error("key '" + key + "': scaling rows exist for l = 0..3 only");
            p.a3_scale[static_cast<size_t>(l)] = num;
        } else {
            throw config_error("unknown section [" + section + "] (line " + std::to_string(line_no) + ")");
        }
    }

    for (int l = 0; l <= 3; ++l) {
        const std::string sec = "l=" + std::to_string(l);
        for (const char* k : {"a1", "a2", "a3", "a4", "r_c"})
            if (!seen.count(sec + "/" + k))
                throw config_error("missing key '" + std::string(k) + "' in section [" + sec + "]");
    }
    for (const char* k : {"Z", "alpha_c"})
        if (!seen.count(std::string("global/") + k))
            throw config_error("missing key '" + std::string(k) + "' in section [global]");

    validate_params(p);
    return p;
}

void validate_params(const ModelParams& p) {
    if (p.Z < 1) throw config_error("Z must be a positive integer");
    if (p.alpha_c < 0.0) throw config_error("alpha_c must be >= 0");
    if (p.alpha_fs < 0.0) throw config_error("alpha_fs must be >= 0");
    for (size_t l = 0; l < p.rows.size(); ++l) {
        const CoreRow& row = p.rows[l];
        if (row.a1 <= 0.0 || row.a2 <= 0.0)
            throw config_error("a1, a2 must be positive in section [l=" + std::to_string(l) + "]");
        if (row.r_c <= 0.0)
            throw config_error("r_c must be positive in section [l=" + std::to_string(l) + "]");
        if (p.a3_scale[l] <= 0.0)
            throw config_error("a3_scale_" + std::to_string(l) + " must be positive");
    }
    const double lo = 1.0 / p.Z;
    const double hi = std::pow(static_cast<double>(p.Z), -1.0 / 3.0);
    for (const auto& [l, rso] : p.r_so) {
        if (p.Z > 1 && !(rso > lo && rso < hi))
            throw config_error("r_so_" + std::to_string(l) + " = " + std::to_string(rso)
                               + " outside the physical window (1/Z, Z^(-1/3))");
        if (p.Z == 1 && rso <= 0.0)
            throw config_error("r_so_" + std::to_string(l) + " must be positive");
    }

    if (p.Z == 37) {
        // Guard against digit corruption of the published Rb rows: the
        // products a2 * r_c are locked to 1e-4 relative.
        static const double pub[4][2] = {
            {1.64915255, 1.66242117},
            {1.92828831, 1.50195124},
            {1.57027864, 4.86851938},
            {1.76810544, 4.79831327},
        };
        for (size_t l = 0; l < 4; ++l) {
            const double got = p.rows[l].a2 * p.rows[l].r_c;
            const double want = pub[l][0] * pub[l][1];
            if (std::fabs(got - want) > 1e-4 * std::fabs(want))
                throw config_error("section [l=" + std::to_string(l)
                                   + "]: a2 * r_c deviates from the published Rb row"
                                   " by more than 1e-4 relative");
        }
    }
}

std::string default_data_dir() {
    if (const char* env = std::getenv("RBWKB_DATA_DIR"); env && *env)
        return env;
    return RBWKB_DATA_DIR_DEFAULT;
}

ModelParams default_params() {
    return load_params(default_data_dir() + "/rb87.params");
}

} // namespace rbwkb
