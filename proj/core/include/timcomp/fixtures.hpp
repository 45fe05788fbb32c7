#ifndef TIMCOMP_FIXTURES_HPP
#define TIMCOMP_FIXTURES_HPP

#include <optional>
#include <string>

#include "timcomp/scheme.hpp"
#include "timcomp/topology.hpp"

namespace timcomp {

/// Built-in 6-cell network with cells of unequal degree (the running
/// example: achievable 2/5, outer bound 1/2).
Topology fixture_fig5();

/// 5-cell network where each receiver hears 3 transmitters (circulant with
/// offsets {0, 2, 3}).
Topology fixture_reg53();

/// Cyclic Wyner-type network: receiver j hears transmitters j and j+1.
Topology fixture_wyner(int K);

/// Lower-triangular network: receiver j hears transmitters 1..j.
Topology fixture_triangular(int K);

/// 6-cell network admitting the proper partition {{1,3,5},{2,4,6}}.
Topology fixture_ex7();

/// 4-cell network where TDMA is optimal (empty alignment graph).
Topology fixture_ex9();

/// Ten-slot repetition scheme on fixture_reg53() that survives per-slot
/// fading: every fifth symbol is sent twice and recovered by successive
/// cancellation. Delivers 5 instances per message in n=10 (DoF 1/2).
SchemeDescriptor fixture_ex4_repetition();

/// Demo registry entry: a topology plus, for scheme demos, the scheme.
struct DemoFixture {
    std::string name;
    Topology topo;
    std::optional<SchemeDescriptor> scheme;
};

/// Resolves demo names: fig5, reg53, wyner:K, triangular:K, ex7, ex9,
/// ex4-repetition. Returns nullopt for unknown names or bad parameters.
std::optional<DemoFixture> find_fixture(const std::string& name);

}  // namespace timcomp

#endif  // TIMCOMP_FIXTURES_HPP
