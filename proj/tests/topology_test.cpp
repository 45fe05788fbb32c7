#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "timcomp/errors.hpp"
#include "timcomp/fixtures.hpp"
#include "timcomp/topology.hpp"

using namespace timcomp;

namespace {

const char* kFig5Text =
    "6\n"
    "100100\n"
    "111100\n"
    "101000\n"
    "001110\n"
    "001010\n"
    "001001\n";

std::vector<int> random_perm(int K, std::mt19937_64& rng) {
    std::vector<int> p(K);
    for (int i = 0; i < K; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("parse/render round trip") {
    const Topology topo = parse_topology(kFig5Text);
    CHECK(topo.K == 6);
    CHECK(render_topology(topo) == kFig5Text);
    CHECK(topo == fixture_fig5());
    // T_2 = {1,2,3,4}, R_3 = receivers hearing transmitter 3 = {2,4,5,6}
    CHECK(topo.transmit[1] == 0b001111u);
    CHECK(topo.receive[2] == 0b111110u);
    CHECK(topo.connected(0, 0));
    CHECK(!topo.connected(0, 1));
}

TEST_CASE("parse tolerates comments and whitespace") {
    const Topology topo = parse_topology(
        "# cyclic example\n 2 \n\n11\n # inner comment\n 11 \n");
    CHECK(topo == fixture_wyner(2));
}

TEST_CASE("parse errors carry kind and 1-based index") {
    const auto expect = [](const std::string& text, ParseError::Kind kind,
                           int index) {
        try {
            parse_topology(text);
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(e.kind == kind);
            CHECK(e.index == index);
        }
    };
    expect("abc\n11\n11\n", ParseError::Kind::kMissingSize, 0);
    expect("", ParseError::Kind::kMissingSize, 0);
    expect("2\n11\n", ParseError::Kind::kRowCount, 1);
    expect("2\n11\n11\n10\n", ParseError::Kind::kRowCount, 3);
    expect("2\n111\n11\n", ParseError::Kind::kRowLength, 1);
    expect("2\n11\n1\n", ParseError::Kind::kRowLength, 2);
    expect("2\n11\n1x\n", ParseError::Kind::kBadCharacter, 2);
    expect("2\n00\n11\n", ParseError::Kind::kEmptyRow, 1);
    expect("2\n10\n10\n", ParseError::Kind::kEmptyColumn, 2);
}

TEST_CASE("from_rows validates rows and columns") {
    CHECK_THROWS_AS(Topology::from_rows(2, {0b00u, 0b11u}), ParseError);
    CHECK_THROWS_AS(Topology::from_rows(2, {0b01u, 0b01u}), ParseError);
    const Topology topo = Topology::from_rows(3, {0b011u, 0b110u, 0b101u});
    CHECK(topo.receive[0] == 0b101u);
    CHECK(topo.receive[1] == 0b011u);
    CHECK(topo.receive[2] == 0b110u);
}

TEST_CASE("canonical key is permutation invariant") {
    std::mt19937_64 rng(42);
    for (const Topology& base :
         {fixture_fig5(), fixture_reg53(), fixture_triangular(5)}) {
        const std::string key = canonical_key(base);
        for (int rep = 0; rep < 10; ++rep) {
            const Topology shuffled =
                permute(base, random_perm(base.K, rng), random_perm(base.K, rng));
            CHECK(canonical_key(shuffled) == key);
        }
    }
}

TEST_CASE("canonical key separates non-isomorphic topologies") {
    CHECK(canonical_key(fixture_wyner(4)) != canonical_key(fixture_triangular(4)));
    CHECK(canonical_key(make_regular(5, 3)) == canonical_key(fixture_reg53()));
}

TEST_CASE("classify recognizes the structured families") {
    const TopologyClass reg = classify(make_regular(6, 3));
    REQUIRE(reg.regular.has_value());
    CHECK(*reg.regular == std::pair<int, int>{6, 3});
    CHECK(!reg.triangular);
    CHECK(!reg.fully_connected);

    std::mt19937_64 rng(7);
    const Topology shuffled_reg =
        permute(fixture_reg53(), random_perm(5, rng), random_perm(5, rng));
    REQUIRE(classify(shuffled_reg).regular.has_value());
    CHECK(*classify(shuffled_reg).regular == std::pair<int, int>{5, 3});

    const TopologyClass tri = classify(make_triangular(4));
    CHECK(tri.triangular);
    CHECK(!tri.regular.has_value());

    const TopologyClass full = classify(make_regular(3, 3));
    CHECK(full.fully_connected);
    REQUIRE(full.regular.has_value());
    CHECK(*full.regular == std::pair<int, int>{3, 3});

    CHECK(!classify(fixture_fig5()).regular.has_value());
    CHECK(!classify(fixture_fig5()).triangular);
}

TEST_CASE("enumerate_topologies counts and uniqueness") {
    CHECK(enumerate_topologies(1).size() == 1);
    CHECK(enumerate_topologies(2).size() == 3);
    CHECK(enumerate_topologies(3).size() == 17);
    CHECK(enumerate_topologies(4).size() == 179);

    // Independent oracle at K = 2: classify every valid matrix directly.
    std::set<std::string> keys;
    for (unsigned bits = 0; bits < 16; ++bits) {
        const std::vector<std::uint32_t> rows = {bits & 3u, (bits >> 2) & 3u};
        try {
            keys.insert(canonical_key(Topology::from_rows(2, rows)));
        } catch (const ParseError&) {
        }
    }
    CHECK(keys.size() == 3);

    const auto reps = enumerate_topologies(3);
    std::vector<std::string> rep_keys;
    for (const Topology& t : reps) rep_keys.push_back(canonical_key(t));
    CHECK(std::is_sorted(rep_keys.begin(), rep_keys.end()));
    CHECK(std::adjacent_find(rep_keys.begin(), rep_keys.end()) == rep_keys.end());
}

TEST_CASE("permute relabels both sides") {
    const Topology topo = fixture_triangular(3);
    const Topology rotated = permute(topo, {1, 2, 0}, {1, 2, 0});
    // Receiver 1 of the result is old receiver 2 (T = {1,2}) with
    // transmitters relabeled 2->1, 3->2, 1->3.
    CHECK(rotated.transmit[0] == 0b101u);
    const std::vector<int> id = {0, 1, 2};
    CHECK(permute(topo, id, id) == topo);
}

TEST_CASE("builders match their definitions") {
    const Topology wyner = make_regular(4, 2);
    CHECK(wyner.transmit == std::vector<std::uint32_t>{0b0011u, 0b0110u,
                                                       0b1100u, 0b1001u});
    const Topology tri = make_triangular(3);
    CHECK(tri.transmit == std::vector<std::uint32_t>{0b001u, 0b011u, 0b111u});
}

TEST_CASE("size guards refuse oversized inputs") {
    CHECK_THROWS_AS(canonical_key(make_regular(9, 2)), GuardError);
    CHECK_THROWS_AS(classify(make_regular(9, 2)), GuardError);
    CHECK_THROWS_AS(enumerate_topologies(6), GuardError);
}

TEST_CASE("fixture registry resolves names") {
    REQUIRE(find_fixture("fig5").has_value());
    CHECK(find_fixture("fig5")->topo == fixture_fig5());
    CHECK(!find_fixture("fig5")->scheme.has_value());
    REQUIRE(find_fixture("wyner:5").has_value());
    CHECK(find_fixture("wyner:5")->topo == fixture_wyner(5));
    REQUIRE(find_fixture("triangular:4").has_value());
    CHECK(find_fixture("triangular:4")->topo == fixture_triangular(4));
    REQUIRE(find_fixture("ex4-repetition").has_value());
    CHECK(find_fixture("ex4-repetition")->topo == fixture_reg53());
    CHECK(find_fixture("ex4-repetition")->scheme.has_value());
    CHECK(!find_fixture("nonsense").has_value());
    CHECK(!find_fixture("wyner:1").has_value());
    CHECK(!find_fixture("wyner:99").has_value());
}
