#include <doctest.h>

#include <algorithm>
#include <map>

#include "timcomp/errors.hpp"
#include "timcomp/fixtures.hpp"
#include "timcomp/verifier.hpp"

using namespace timcomp;

namespace {

// Two-user network where everyone hears everyone; plain TDMA over n = 2.
SchemeDescriptor tdma2_scheme() {
    SchemeDescriptor s;
    s.n = 2;
    s.num_vectors = 2;
    s.genericity = Genericity::kStandardBasis;
    s.coherence_required = 1;
    s.claimed_dof = Rational(1, 2);
    s.transmissions = {{1, 1, 1, 1}, {2, 2, 1, 2}};
    return s;
}

}  // namespace

TEST_CASE("TDMA on the fully connected pair decodes in one pass") {
    const Topology topo = fixture_wyner(2);
    const SchemeDescriptor scheme = tdma2_scheme();
    const DecodeResult r = check_combinatorial(topo, scheme);
    CHECK(r.ok);
    REQUIRE(r.receivers.size() == 2);
    CHECK(r.receivers[0].recovered ==
          std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(r.receivers[1].recovered ==
          std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(r.receivers[0].rounds == 1);
    CHECK(check_numeric(topo, scheme, 7, 8));
    CHECK(verify_claim(topo, scheme));
}

TEST_CASE("repetition fixture survives per-slot fading") {
    const auto fixture = find_fixture("ex4-repetition");
    REQUIRE(fixture.has_value());
    REQUIRE(fixture->scheme.has_value());
    const Topology& topo = fixture->topo;
    const SchemeDescriptor& scheme = *fixture->scheme;
    CHECK(scheme.n == 10);
    CHECK(scheme.coherence_required == 1);
    CHECK(scheme.claimed_dof == Rational(1, 2));

    const DecodeResult r = check_combinatorial(topo, scheme);
    CHECK(r.ok);
    int max_rounds = 0;
    for (const ReceiverDecode& rd : r.receivers) {
        CHECK(rd.ok);
        CHECK(rd.recovered.size() == 5);  // n * dof = 10 * 1/2
        max_rounds = std::max(max_rounds, rd.rounds);
    }
    CHECK(max_rounds >= 2);  // successive cancellation is actually exercised
    CHECK(check_numeric(topo, scheme, 7, 8));
    CHECK(verify_claim(topo, scheme));
}

TEST_CASE("over-claimed rates are rejected") {
    const auto fixture = find_fixture("ex4-repetition");
    SchemeDescriptor greedy = *fixture->scheme;
    greedy.claimed_dof = Rational(3, 5);
    CHECK(!verify_claim(fixture->topo, greedy));
}

TEST_CASE("losing a transmission breaks decodability") {
    const auto fixture = find_fixture("ex4-repetition");
    SchemeDescriptor broken = *fixture->scheme;
    broken.transmissions.pop_back();
    CHECK(!check_combinatorial(fixture->topo, broken).ok);
    CHECK(!verify_claim(fixture->topo, broken));
}

TEST_CASE("colliding vectors hide each other") {
    const Topology topo = fixture_wyner(2);
    SchemeDescriptor scheme = tdma2_scheme();
    // Move the second transmission onto vector 1 from the other transmitter:
    // both receivers now see a superposition nobody can split.
    scheme.transmissions[1].vec = 1;
    const DecodeResult r = check_combinatorial(topo, scheme);
    CHECK(!r.ok);
    CHECK(!check_numeric(topo, scheme, 7, 4));
}

TEST_CASE("malformed schemes throw input errors") {
    const Topology topo = fixture_wyner(2);
    SchemeDescriptor scheme = tdma2_scheme();

    SUBCASE("duplicate (transmitter, vector) pair") {
        scheme.transmissions.push_back({1, 2, 1, 1});
        CHECK_THROWS_AS(check_combinatorial(topo, scheme), Error);
    }
    SUBCASE("transmitter out of range") {
        scheme.transmissions[0].tx = 3;
        CHECK_THROWS_AS(check_combinatorial(topo, scheme), Error);
    }
    SUBCASE("message out of range") {
        scheme.transmissions[0].msg = 0;
        CHECK_THROWS_AS(check_combinatorial(topo, scheme), Error);
    }
    SUBCASE("vector index out of range") {
        scheme.transmissions[0].vec = 3;
        CHECK_THROWS_AS(check_combinatorial(topo, scheme), Error);
    }
    SUBCASE("nonpositive extension length") {
        scheme.n = 0;
        CHECK_THROWS_AS(check_combinatorial(topo, scheme), Error);
    }
    SUBCASE("nonpositive trial count") {
        CHECK_THROWS_AS(check_numeric(topo, scheme, 7, 0), Error);
    }
}

TEST_CASE("empty schemes verify only a zero claim") {
    const Topology topo = fixture_wyner(2);
    SchemeDescriptor empty;
    empty.n = 1;
    empty.num_vectors = 1;
    empty.claimed_dof = 0;
    CHECK(verify_claim(topo, empty));
    empty.claimed_dof = Rational(1, 2);
    CHECK(!verify_claim(topo, empty));
}

TEST_CASE("decode results serialize with 1-based labels") {
    const Topology topo = fixture_wyner(2);
    const DecodeResult r = check_combinatorial(topo, tdma2_scheme());
    const std::string json = decode_result_to_json(r);
    CHECK(json.find("\"receiver\"") != std::string::npos);
    CHECK(json.find("\"rounds\"") != std::string::npos);
    CHECK(json.find("\"msg\": 1") != std::string::npos);
}
