#ifndef TIMCOMP_TESTS_TEST_UTIL_HPP
#define TIMCOMP_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "timcomp/topology.hpp"

namespace timcomp::testutil {

/// Uniform random valid topology (no empty row or column) with the given K.
inline Topology random_topology(int K, std::mt19937_64& rng) {
    const std::uint32_t full = K == 32 ? ~0u : ((1u << K) - 1u);
    std::vector<std::uint32_t> rows(K);
    while (true) {
        for (auto& r : rows) r = static_cast<std::uint32_t>(rng()) & full;
        bool ok = true;
        std::uint32_t column_union = 0;
        for (std::uint32_t r : rows) {
            if (r == 0) ok = false;
            column_union |= r;
        }
        if (ok && column_union == full) return Topology::from_rows(K, rows);
    }
}

inline std::vector<int> random_permutation(int K, std::mt19937_64& rng) {
    std::vector<int> p(K);
    for (int i = 0; i < K; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace timcomp::testutil

#endif  // TIMCOMP_TESTS_TEST_UTIL_HPP
