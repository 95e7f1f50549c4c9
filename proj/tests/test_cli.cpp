// End-to-end tests driving the installed CLI binary (path injected by the
// build as RBWKB_CLI_PATH).

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef RBWKB_CLI_PATH
#error "RBWKB_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tag = "rbwkb_cli_" + std::to_string(counter++);
    const std::string out_path = tag + ".out";
    const std::string err_path = tag + ".err";
    const std::string cmd = std::string(RBWKB_CLI_PATH) + " " + args + " > " +
                            out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
#ifdef _WIN32
    r.exit_code = status;
#else
    r.exit_code = WEXITSTATUS(status);
#endif
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Rows of a CSV file keyed by first field prefix.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace

TEST_CASE("cli: missing spin-orbit cutoff is a config error naming the key") {
    const auto r = run_cli("defects --l 5");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "r_so_5"));
}

TEST_CASE("cli: defects report") {
    const auto r = run_cli("defects --out cli_defects.csv");
    // The five defect rows pass their 1e-3 band; the two j-difference rows
    // exceed their tighter bands, so the command reports a tolerance failure.
    CHECK(r.exit_code == 4);
    CHECK(contains(r.out, "defect n=57 l=0 j=0.5"));
    CHECK(contains(r.out, "defect n=57 l=2 j=2.5"));
    CHECK(contains(r.out, "defect_difference n=57 l=1"));
    CHECK(contains(r.out, "defect_difference n=57 l=2"));
    CHECK(contains(r.out, "PASS"));
    CHECK(contains(r.out, "FAIL"));

    const auto rows = csv_rows(slurp("cli_defects.csv"));
    std::remove("cli_defects.csv");
    REQUIRE(rows.size() == 8); // header + 7 rows
    int pass = 0, fail = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() >= 9);
        if (rows[i][8] == "pass") ++pass;
        if (rows[i][8] == "fail") ++fail;
    }
    CHECK(pass == 5);
    CHECK(fail == 2);
}

TEST_CASE("cli: alpha_fs = 0 collapses the j doublets") {
    const auto r = run_cli("--alpha-fs 0 defects --out cli_zero.csv");
    const auto rows = csv_rows(slurp("cli_zero.csv"));
    std::remove("cli_zero.csv");
    REQUIRE(rows.size() == 8);
    double d_lo = 0.0, d_hi = 0.0;
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] == "defect n=57 l=1 j=0.5") d_lo = std::stod(rows[i][1]);
        if (rows[i][0] == "defect n=57 l=1 j=1.5") d_hi = std::stod(rows[i][1]);
        if (rows[i][0] == "defect_difference n=57 l=2")
            CHECK(std::fabs(std::stod(rows[i][1])) < 1e-12);
    }
    CHECK(d_lo == d_hi);
    (void)r;
}

TEST_CASE("cli: a3 scale override moves the l=2 defects out of band") {
    const auto r = run_cli("--a3-scale 2=1.0 defects --l 2");
    CHECK(r.exit_code == 4);
    CHECK(contains(r.out, "FAIL"));
}

TEST_CASE("cli: action scan") {
    SUBCASE("pure Coulomb slope is unity") {
        const auto r = run_cli("action-scan --pure-coulomb --l 1 --points 5");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "slope=1.00000000"));
    }
    SUBCASE("default channel emits plot-ready CSV") {
        const auto r = run_cli("action-scan --l 0 --points 5 --xmin 20 --xmax 40");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "inv_sqrt_neg_E,nu,abs_err,r_minus,r_plus"));
        CHECK(contains(r.out, "# fit: slope="));
        // l = 0: no inner turning point, so the r_minus field is empty.
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() == 6); // header + 5 points
        for (size_t i = 1; i < rows.size(); ++i) {
            REQUIRE(rows[i].size() == 5);
            CHECK(rows[i][3].empty());
        }
    }
    SUBCASE("byte-identical across runs") {
        const auto a = run_cli("action-scan --l 2 --points 5 --out cli_scan_a.csv");
        const auto b = run_cli("action-scan --l 2 --points 5 --out cli_scan_b.csv");
        CHECK(a.exit_code == 0);
        CHECK(b.exit_code == 0);
        CHECK(slurp("cli_scan_a.csv") == slurp("cli_scan_b.csv"));
        std::remove("cli_scan_a.csv");
        std::remove("cli_scan_b.csv");
    }
}

TEST_CASE("cli: momentum profile") {
    const auto r = run_cli("momentum-profile --samples 48 --out cli_mom.csv");
    CHECK(r.exit_code == 0);
    const std::string text = slurp("cli_mom.csv");
    std::remove("cli_mom.csv");
    const auto rows = csv_rows(text);
    REQUIRE(rows.size() == 1 + 3 * 48);

    double l0_first = -1.0;
    double l2_first = -1.0, l2_last = -1.0;
    for (size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 4);
        if (rows[i][0] == "0" && l0_first < 0) l0_first = std::stod(rows[i][3]);
        if (rows[i][0] == "2") {
            if (l2_first < 0) l2_first = std::stod(rows[i][3]);
            l2_last = std::stod(rows[i][3]);
        }
    }
    // l = 2 vanishes at both turning points; l = 0 is still large at the
    // inner edge of the grid (no inner turning point).
    CHECK(l2_first < 1e-4);
    CHECK(l2_last < 1e-4);
    CHECK(l0_first > 1.0);
}

TEST_CASE("cli: oracle budget path") {
    const auto r = run_cli("oracle-check --n 30 --l 1");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "omitted"));
    CHECK(contains(r.err, "budget"));
}

TEST_CASE("cli: oracle agrees for pure Coulomb") {
    const auto r = run_cli("oracle-check --pure-coulomb --n 8 --l 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PASS"));
}

TEST_CASE("cli: reproduce-tables exits nonzero while cells disagree") {
    const auto r = run_cli("reproduce-tables --out cli_tables.csv --format json");
    CHECK(r.exit_code == 4);
    CHECK(contains(r.out, "fine_splitting n=30 l=1"));
    CHECK(contains(r.out, "defect n=57 l=0 j=0.5"));
    CHECK(contains(r.out, "li2003"));
    CHECK(contains(r.out, "FAIL"));
    const std::string js = slurp("cli_tables.csv");
    std::remove("cli_tables.csv");
    CHECK(contains(js, "\"all_passed\""));
    CHECK(contains(js, "wkb_model"));
}

TEST_CASE("cli: bad usage") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("action-scan --points 1").exit_code == 2);
    CHECK(run_cli("--params /nonexistent.params defects").exit_code == 2);
}
