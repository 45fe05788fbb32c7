#include "timcomp/fixtures.hpp"

#include <charconv>

namespace timcomp {

namespace {

/// Bitmask from 1-based member indices.
std::uint32_t members(std::initializer_list<int> xs) {
    std::uint32_t m = 0;
    for (int x : xs) m |= 1u << (x - 1);
    return m;
}

std::optional<int> parse_int(const std::string& s) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

Topology fixture_fig5() {
    return Topology::from_rows(6, {
                                      members({1, 4}),           // T_1
                                      members({1, 2, 3, 4}),     // T_2
                                      members({1, 3}),           // T_3
                                      members({3, 4, 5}),        // T_4
                                      members({3, 5}),           // T_5
                                      members({3, 6}),           // T_6
                                  });
}

Topology fixture_reg53() {
    return Topology::from_rows(5, {
                                      members({1, 3, 4}),  // T_1
                                      members({2, 4, 5}),  // T_2
                                      members({1, 3, 5}),  // T_3
                                      members({1, 2, 4}),  // T_4
                                      members({2, 3, 5}),  // T_5
                                  });
}

Topology fixture_wyner(int K) { return make_regular(K, 2); }

Topology fixture_triangular(int K) { return make_triangular(K); }

Topology fixture_ex7() {
    return Topology::from_rows(6, {
                                      members({1, 4}),
                                      members({2, 3}),
                                      members({2, 3}),
                                      members({1, 2, 4}),
                                      members({3, 5, 6}),
                                      members({4, 5, 6}),
                                  });
}

Topology fixture_ex9() {
    return Topology::from_rows(4, {
                                      members({1, 2}),
                                      members({1, 2}),
                                      members({1, 2, 3, 4}),
                                      members({1, 2, 3, 4}),
                                  });
}

SchemeDescriptor fixture_ex4_repetition() {
    SchemeDescriptor scheme;
    scheme.n = 10;
    scheme.num_vectors = 10;
    scheme.genericity = Genericity::kStandardBasis;
    scheme.coherence_required = 1;
    scheme.claimed_dof = Rational(1, 2);
    // Messages 1..5 at receivers 1..5; instance 5 of each message is sent
    // twice so it can be reconstructed and cancelled at every receiver.
    scheme.transmissions = {
        // transmitter 1
        {1, 3, 1, 1}, {1, 3, 3, 2}, {1, 4, 1, 5}, {1, 4, 3, 6}, {1, 1, 5, 7},
        {1, 4, 5, 9},
        // transmitter 2
        {2, 4, 2, 3}, {2, 4, 4, 4}, {2, 5, 1, 7}, {2, 5, 3, 8}, {2, 5, 5, 2},
        {2, 2, 5, 10},
        // transmitter 3
        {3, 5, 2, 5}, {3, 5, 4, 6}, {3, 1, 1, 9}, {3, 1, 3, 10}, {3, 3, 5, 1},
        {3, 1, 5, 4},
        // transmitter 4
        {4, 2, 2, 1}, {4, 2, 4, 2}, {4, 1, 2, 7}, {4, 1, 4, 8}, {4, 4, 5, 3},
        {4, 2, 5, 5},
        // transmitter 5
        {5, 3, 2, 3}, {5, 3, 4, 4}, {5, 2, 1, 9}, {5, 2, 3, 10}, {5, 5, 5, 6},
        {5, 3, 5, 8},
    };
    return scheme;
}

std::optional<DemoFixture> find_fixture(const std::string& name) {
    if (name == "fig5") return DemoFixture{name, fixture_fig5(), std::nullopt};
    if (name == "reg53") return DemoFixture{name, fixture_reg53(), std::nullopt};
    if (name == "ex7") return DemoFixture{name, fixture_ex7(), std::nullopt};
    if (name == "ex9") return DemoFixture{name, fixture_ex9(), std::nullopt};
    if (name == "ex4-repetition") {
        return DemoFixture{name, fixture_reg53(), fixture_ex4_repetition()};
    }
    const auto parametric = [&](const std::string& prefix,
                                auto&& make) -> std::optional<DemoFixture> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        const auto K = parse_int(name.substr(prefix.size()));
        if (!K || *K < 2 || *K > 16) return std::nullopt;
        return DemoFixture{name, make(*K), std::nullopt};
    };
    if (auto f = parametric("wyner:", fixture_wyner)) return f;
    if (auto f = parametric("triangular:", fixture_triangular)) return f;
    return std::nullopt;
}

}  // namespace timcomp
