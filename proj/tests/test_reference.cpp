#include "rbwkb/errors.hpp"
#include "rbwkb/params.hpp"
#include "rbwkb/reference.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace rbwkb;

namespace {

std::vector<ReferenceRecord> bundled() {
    return load_references(default_data_dir() + "/reference_tables.csv");
}

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = std::string("rbwkb_test_") + name;
    std::ofstream out(path);
    out << body;
    return path;
}

} // namespace

TEST_CASE("bundled reference table loads") {
    const auto refs = bundled();
    CHECK(refs.size() > 50);

    // Spot checks against the shipped file.
    const auto p30 = select(refs, "fine_splitting", 30, 1);
    REQUIRE(!p30.empty());
    bool found = false;
    for (const auto& r : p30)
        if (r.source == "li2003") {
            CHECK(r.value == doctest::Approx(4246.30).epsilon(1e-12));
            CHECK(r.unit == "MHz");
            REQUIRE(r.uncertainty.has_value());
            CHECK(*r.uncertainty == doctest::Approx(0.05).epsilon(1e-12));
            found = true;
        }
    CHECK(found);
    bool found_model = false;
    for (const auto& r : p30)
        if (r.source == "wkb_model") {
            CHECK(r.value == doctest::Approx(4246.46).epsilon(1e-12));
            found_model = true;
        }
    CHECK(found_model);

    const auto d57 = select(refs, "defect", 57, 0, 0.5);
    REQUIRE(!d57.empty());
    found = false;
    for (const auto& r : d57)
        if (r.source == "wkb_model") {
            CHECK(r.value == doctest::Approx(3.13095).epsilon(1e-12));
            found = true;
        }
    CHECK(found);

    // j filter: without j, both D rows appear; with j, one.
    const auto all_d2 = select(refs, "defect", 57, 2);
    const auto d2_52 = select(refs, "defect", 57, 2, 2.5);
    CHECK(all_d2.size() > d2_52.size());
    for (const auto& r : d2_52) CHECK(r.j == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("every source label is declared in the header") {
    const auto refs = bundled();
    for (const auto& r : refs) {
        const bool known = r.source == "li2003" || r.source == "mack2011" ||
                           r.source == "sansonetti2006" || r.source == "pawlak2014" ||
                           r.source == "wkb_model";
        CHECK(known);
    }
}

TEST_CASE("malformed reference rows are rejected with line numbers") {
    SUBCASE("wrong field count") {
        const auto path = write_temp("short.csv",
            "# sources: wkb_model\n"
            "observable,n,l,j,value,uncertainty,unit,source\n"
            "fine_splitting,30,1,100.0\n");
        CHECK_THROWS_WITH_AS(load_references(path), doctest::Contains("line 3"),
                             config_error);
        std::remove(path.c_str());
    }
    SUBCASE("unknown observable") {
        const auto path = write_temp("obs.csv",
            "# sources: wkb_model\n"
            "observable,n,l,j,value,uncertainty,unit,source\n"
            "lifetime,30,1,,100.0,,MHz,wkb_model\n");
        CHECK_THROWS_AS(load_references(path), config_error);
        std::remove(path.c_str());
    }
    SUBCASE("undeclared source") {
        const auto path = write_temp("src.csv",
            "# sources: wkb_model\n"
            "observable,n,l,j,value,uncertainty,unit,source\n"
            "fine_splitting,30,1,,100.0,,MHz,somebody1999\n");
        CHECK_THROWS_AS(load_references(path), config_error);
        std::remove(path.c_str());
    }
}

TEST_CASE("comparison rows judge pass, fail, and informational") {
    ComparisonRow rel;
    rel.label = "x";
    rel.computed = 100.2;
    rel.reference = 100.0;
    rel.tolerance = 0.005;
    judge(rel);
    CHECK(rel.status == RowStatus::pass);
    rel.computed = 101.0;
    judge(rel);
    CHECK(rel.status == RowStatus::fail);

    ComparisonRow abs;
    abs.label = "y";
    abs.computed = 3.1315;
    abs.reference = 3.1310;
    abs.tolerance = 1e-3;
    abs.absolute = true;
    judge(abs);
    CHECK(abs.status == RowStatus::pass);
    abs.computed = 3.1330;
    judge(abs);
    CHECK(abs.status == RowStatus::fail);

    ComparisonRow info;
    info.label = "z";
    info.computed = 1.0;
    info.reference = 2.0;
    judge(info); // tolerance 0: informational only
    CHECK(info.status == RowStatus::omitted);

    ComparisonRow norefs;
    norefs.label = "w";
    norefs.computed = 1.0;
    judge(norefs);
    CHECK(norefs.status == RowStatus::omitted);
}

TEST_CASE("report serialization") {
    ComparisonReport rep;
    ComparisonRow row;
    row.label = "fine_splitting n=30 l=1";
    row.computed = 4305.5942;
    row.reference = 4246.46;
    row.source = "li2003";
    row.tolerance = 0.002;
    judge(row);
    rep.rows.push_back(row);

    CHECK(!rep.all_passed());

    const std::string text = to_text(rep);
    CHECK(text.find("fine_splitting n=30 l=1") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);

    const std::string csv = to_csv(rep);
    CHECK(csv.find("row,computed,reference,source,abs_dev,rel_dev,tolerance,"
                   "tolerance_kind,status,note") == 0);
    CHECK(csv.find("li2003") != std::string::npos);

    const std::string js = to_json(rep);
    CHECK(js.find("\"all_passed\"") != std::string::npos);
    CHECK(js.find("\"fail\"") != std::string::npos);
}

TEST_CASE("byte-identical serialization across calls") {
    const auto refs = bundled();
    ComparisonReport rep;
    for (const auto& r : select(refs, "fine_splitting", 30, 1)) {
        ComparisonRow row;
        row.label = "fine_splitting n=30 l=1";
        row.computed = 4305.5942;
        row.reference = r.value;
        row.source = r.source;
        judge(row);
        rep.rows.push_back(row);
    }
    CHECK(to_csv(rep) == to_csv(rep));
    CHECK(to_json(rep) == to_json(rep));
    CHECK(to_text(rep) == to_text(rep));
}
