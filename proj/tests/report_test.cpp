#include <doctest.h>

#include <string>
#include <vector>

#include "timcomp/bounds.hpp"
#include "timcomp/errors.hpp"
#include "timcomp/fixtures.hpp"
#include "timcomp/report.hpp"

using namespace timcomp;

TEST_CASE("FNV-1a reference vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("report document for the 6-cell example") {
    const Topology topo = fixture_fig5();
    const ReportDocument doc = build_report(topo, analyze(topo));

    CHECK(doc.version == std::string(kToolVersion));
    CHECK(doc.input_hash == fnv1a_hex(render_topology(topo)));
    CHECK(doc.input_hash == "b2a95c2389d31cb8");
    CHECK(doc.K == 6);
    REQUIRE(doc.rows.size() == 6);
    CHECK(doc.rows[0] == "100100");
    CHECK(doc.rows[5] == "001001");

    REQUIRE(doc.entries.size() == 9);
    std::vector<std::string> expected_order = kAchievableMethods;
    expected_order.insert(expected_order.end(), kOuterMethods.begin(),
                          kOuterMethods.end());
    for (std::size_t i = 0; i < doc.entries.size(); ++i) {
        CHECK(doc.entries[i].method == expected_order[i]);
        CHECK(doc.entries[i].status == "computed");
    }
    CHECK(doc.entries[0].value == "2/5");  // coloring
    CHECK(doc.entries[1].value == "2/5");  // covering
    CHECK(doc.entries[3].value == "1/3");  // matching
    CHECK(doc.entries[5].value == "");     // not a regular network
    CHECK(doc.entries[6].value == "1/2");  // generator
    CHECK(doc.entries[7].value == "4/7");  // compound
    CHECK(doc.entries[8].value == "");     // TDMA not optimal

    CHECK(!doc.entries[1].certificate_json.empty());  // covering certificate
    CHECK(!doc.entries[6].certificate_json.empty());  // generator certificate
    CHECK(doc.best_achievable == "2/5");
    CHECK(doc.best_outer == "1/2");
    CHECK(!doc.tight);
}

TEST_CASE("JSON round trip is lossless") {
    for (const char* name : {"fig5", "reg53", "ex9", "triangular:4"}) {
        const auto fixture = find_fixture(name);
        REQUIRE(fixture.has_value());
        const ReportDocument doc =
            build_report(fixture->topo, analyze(fixture->topo));
        CHECK(report_from_json(report_to_json(doc)) == doc);
    }
    // Reports with skipped methods round-trip too.
    const Topology big = make_regular(13, 2);
    const ReportDocument doc = build_report(big, analyze(big));
    bool any_skipped = false;
    for (const auto& e : doc.entries) any_skipped |= (e.status == "skipped");
    CHECK(any_skipped);
    CHECK(report_from_json(report_to_json(doc)) == doc);
}

TEST_CASE("skipped methods are visible in the document") {
    const Topology big = make_regular(13, 2);
    const ReportDocument doc = build_report(big, analyze(big));
    for (const auto& e : doc.entries) {
        if (e.method == "coloring" || e.method == "generator") {
            CHECK(e.status == "skipped");
            CHECK(e.value.empty());
        }
        if (e.method == "covering" || e.method == "compound") {
            CHECK(e.status == "computed");
        }
    }
}

TEST_CASE("malformed report JSON is rejected") {
    CHECK_THROWS_AS(report_from_json("not json at all"), Error);
    CHECK_THROWS_AS(report_from_json("{}"), Error);
    CHECK_THROWS_AS(report_from_json("[1,2,3]"), Error);
}

TEST_CASE("rendered table carries the summary") {
    const Topology topo = fixture_fig5();
    const std::string table = render_report_table(build_report(topo, analyze(topo)));
    CHECK(table.find("coloring") != std::string::npos);
    CHECK(table.find("generator") != std::string::npos);
    CHECK(table.find("2/5") != std::string::npos);
    CHECK(table.find("1/2") != std::string::npos);
}
