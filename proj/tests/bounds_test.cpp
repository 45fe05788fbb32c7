#include <doctest.h>

#include <bit>
#include <random>

#include "test_util.hpp"
#include "timcomp/bounds.hpp"
#include "timcomp/errors.hpp"
#include "timcomp/fixtures.hpp"

using namespace timcomp;

TEST_CASE("signed rowspan membership") {
    // (1,0) is already in span{(1,0)}; the all-positive pattern wins.
    auto pattern = spans_with_sign({1, 0}, {{1, 0}});
    REQUIRE(pattern.has_value());
    CHECK(*pattern == std::vector<int>{1, 1});

    // (1,1) needs one sign flip to land in span{(1,-1)}; flips are tried in
    // increasing binary order, so coordinate 0 is flipped first.
    pattern = spans_with_sign({1, 1}, {{1, -1}});
    REQUIRE(pattern.has_value());
    CHECK(*pattern == std::vector<int>{-1, 1});

    // (0,1) is independent of (1,0) under every sign choice.
    CHECK(!spans_with_sign({0, 1}, {{1, 0}}).has_value());

    // Flips are only allowed on the row's own support.
    CHECK(!spans_with_sign({1, 0, 1}, {{1, 0, 0}, {0, 1, 1}}).has_value());
    pattern = spans_with_sign({1, 0, 1}, {{1, 0, 0}, {0, 0, 1}});
    REQUIRE(pattern.has_value());
    CHECK(*pattern == std::vector<int>{1, 1, 1});
}

TEST_CASE("generator closure reconstructs the pinned 6-cell subset") {
    const Topology topo = fixture_fig5();
    const std::uint32_t S = 0b011101u;   // receivers {1,3,4,5}
    const std::uint32_t I0 = 0b001001u;  // receivers {1,4}
    GeneratorCertificate cert;
    const std::uint32_t closure = generator_closure(topo, S, I0, &cert);
    CHECK(closure == S);
    CHECK(cert.sequence == std::vector<int>{4, 2});  // receivers 5 then 3
    for (const auto& [rx, signs] : cert.sign_patterns) {
        CHECK(((S >> rx) & 1u));
        REQUIRE(signs.size() == 6);
        for (int s : signs) CHECK((s == 1 || s == -1));
    }
    // Seeding with the whole set is trivially closed.
    CHECK(generator_closure(topo, S, S) == S);
    // The empty generator reconstructs nothing.
    CHECK(generator_closure(topo, S, 0) == 0);
}

TEST_CASE("generator bound on pinned networks") {
    SUBCASE("6-cell example: 1/2 via S={1,3,4,5}, I0={1,4}") {
        const auto [value, cert] = generator_bound(fixture_fig5());
        CHECK(value == Rational(1, 2));
        CHECK(cert.S == 0b011101u);
        CHECK(cert.I0 == 0b001001u);
        CHECK(cert.bound == value);
        CHECK(generator_closure(fixture_fig5(), cert.S, cert.I0) == cert.S);
    }
    SUBCASE("triangular networks: 1/K seeded by the last receiver") {
        for (int K = 3; K <= 6; ++K) {
            const auto [value, cert] = generator_bound(fixture_triangular(K));
            CHECK(value == Rational(1, K));
            CHECK(cert.I0 == (1u << (K - 1)));
            CHECK(cert.S == fixture_triangular(K).full_mask());
        }
    }
    SUBCASE("(5,3) network: 4/5") {
        const auto [value, cert] = generator_bound(fixture_reg53());
        CHECK(value == Rational(4, 5));
        CHECK(std::popcount(cert.I0) == 4);
        CHECK(cert.S == fixture_reg53().full_mask());
    }
    SUBCASE("size guard") {
        CHECK_THROWS_AS(generator_bound(make_regular(9, 2)), GuardError);
    }
}

TEST_CASE("compound-settings bound") {
    const auto check_certificate = [](const Topology& topo,
                                      const CompoundCertificate& cert,
                                      const Rational& value) {
        const int K = topo.K;
        // S must cover every transmitter.
        std::uint32_t covered = 0;
        for (int j = 0; j < K; ++j) {
            if ((cert.S >> j) & 1u) covered |= topo.transmit[j];
        }
        CHECK(covered == topo.full_mask());
        // S' collects the transmitters heard only inside S.
        for (int i = 0; i < K; ++i) {
            const bool inside = (topo.receive[i] & ~cert.S) == 0;
            CHECK(((cert.S_prime >> i) & 1u) == (inside ? 1u : 0u));
        }
        const int s = std::popcount(cert.S), sp = std::popcount(cert.S_prime);
        if (2 * K - sp - s > 0) {
            CHECK(Rational(K - sp, 2 * K - sp - s) == value);
        }
    };

    SUBCASE("6-cell example: 4/7") {
        const auto [value, cert] = compound_bound(fixture_fig5());
        CHECK(value == Rational(4, 7));
        check_certificate(fixture_fig5(), cert, value);
    }
    SUBCASE("(5,3) network: 5/8") {
        const auto [value, cert] = compound_bound(fixture_reg53());
        CHECK(value == Rational(5, 8));
        check_certificate(fixture_reg53(), cert, value);
    }
    SUBCASE("fully connected K=3: 3/5") {
        const auto [value, cert] = compound_bound(make_regular(3, 3));
        CHECK(value == Rational(3, 5));
        check_certificate(make_regular(3, 3), cert, value);
    }
    SUBCASE("never exceeds 1 and respects the guard") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 20; ++i) {
            const Topology topo =
                testutil::random_topology(2 + (int)(rng() % 6), rng);
            const auto [value, cert] = compound_bound(topo);
            CHECK(value <= 1);
            CHECK(value > 0);
        }
        CHECK_THROWS_AS(compound_bound(make_regular(17, 2)), GuardError);
    }
}

TEST_CASE("side information and the demand graph") {
    const Topology ex9 = fixture_ex9();
    const auto side = side_info_sets(ex9);
    // Receivers 1 and 2 hear only transmitters {1,2}; the unheard
    // transmitters 3 and 4 reach receivers {3,4}.
    CHECK(side[0] == 0b1100u);
    CHECK(side[1] == 0b1100u);
    // Receivers 3 and 4 hear everyone: no side information.
    CHECK(side[2] == 0u);
    CHECK(side[3] == 0u);

    CHECK(demand_graph_acyclic(build_demand_graph(ex9)));
    CHECK(!demand_graph_acyclic(build_demand_graph(fixture_wyner(3))));
    CHECK(demand_graph_acyclic(build_demand_graph(fixture_triangular(5))));
}

TEST_CASE("TDMA optimality matches on both characterizations") {
    CHECK(tdma_optimal(fixture_ex9()));
    CHECK(tdma_optimal(fixture_triangular(4)));
    CHECK(tdma_optimal(make_regular(3, 3)));
    CHECK(!tdma_optimal(fixture_fig5()));
    CHECK(!tdma_optimal(fixture_wyner(4)));
}

TEST_CASE("aggregated analysis of the 6-cell example") {
    const BoundReport r = analyze(fixture_fig5());
    CHECK(r.coloring == Rational(2, 5));
    CHECK(r.covering == Rational(2, 5));
    CHECK(r.hamiltonian == Rational(2, 5));
    CHECK(r.matching == Rational(1, 3));
    CHECK(r.partition == Rational(1, 3));
    CHECK(!r.regular.has_value());
    CHECK(r.generator == Rational(1, 2));
    CHECK(r.compound == Rational(4, 7));
    CHECK(!r.tdma.has_value());
    CHECK(!r.tdma_is_optimal);
    CHECK(r.best_achievable == Rational(2, 5));
    CHECK(r.best_outer == Rational(1, 2));
    CHECK(!r.tight);
    CHECK(r.skipped.empty());
    CHECK(r.computed.size() == 9);
}

TEST_CASE("method selection limits the work") {
    AnalyzeOptions options;
    options.methods = {"coloring"};
    const BoundReport r = analyze(fixture_fig5(), options);
    CHECK(r.computed == std::set<std::string>{"coloring"});
    CHECK(r.coloring == Rational(2, 5));
    CHECK(!r.covering.has_value());
    CHECK(!r.generator.has_value());
    CHECK(r.best_achievable == Rational(2, 5));
    CHECK(r.best_outer == 1);  // only the trivial outer bound remains
    CHECK(!r.tight);
}

TEST_CASE("guards route oversized methods into skipped") {
    const BoundReport r = analyze(make_regular(13, 2));
    CHECK(r.skipped == std::set<std::string>{"coloring", "hamiltonian",
                                             "partition", "regular",
                                             "generator"});
    CHECK(r.computed == std::set<std::string>{"covering", "matching",
                                              "compound", "tdma"});
    CHECK(r.covering.has_value());
    CHECK(r.best_achievable.has_value());
    CHECK(*r.best_achievable <= r.best_outer);
}

TEST_CASE("the guard override replaces the analysis limits only") {
    // Lowering the limit below K skips everything.
    AnalyzeOptions low;
    low.max_k_override = 5;
    const BoundReport skipped_all = analyze(fixture_fig5(), low);
    CHECK(skipped_all.computed.empty());
    CHECK(skipped_all.skipped.size() == 9);

    // Raising it cannot push a module past its own hard limit.
    AnalyzeOptions high;
    high.methods = {"generator"};
    high.max_k_override = 16;
    const BoundReport still_guarded = analyze(make_regular(9, 2), high);
    CHECK(still_guarded.computed.empty());
    CHECK(still_guarded.skipped == std::set<std::string>{"generator"});
}

TEST_CASE("tight topologies are flagged") {
    const BoundReport wyner = analyze(fixture_wyner(4));
    CHECK(wyner.best_achievable == Rational(2, 3));
    CHECK(wyner.best_outer == Rational(2, 3));
    CHECK(wyner.tight);

    const BoundReport tdma = analyze(fixture_ex9());
    CHECK(tdma.best_achievable == Rational(1, 4));
    CHECK(tdma.best_outer == Rational(1, 4));
    CHECK(tdma.tight);
    CHECK(tdma.tdma_is_optimal);
}
