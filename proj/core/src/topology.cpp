#include "timcomp/topology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace timcomp {

namespace {

constexpr int kCanonicalMaxK = 8;
constexpr int kEnumerateMaxK = 5;

/// Row mask -> '0'/'1' string with character i = Transmitter i+1.
std::string row_to_string(std::uint32_t mask, int K) {
    std::string s(static_cast<std::size_t>(K), '0');
    for (int i = 0; i < K; ++i) {
        if ((mask >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

/**
 * Row key whose integer order equals the lexicographic order of the row
 * string: bit K-1-i of the key is column i of the (already permuted) row.
 */
std::uint32_t row_key(std::uint32_t mask, const std::vector<int>& col_perm, int K) {
    std::uint32_t key = 0;
    for (int i = 0; i < K; ++i) {
        key |= ((mask >> col_perm[static_cast<std::size_t>(i)]) & 1u)
               << (K - 1 - i);
    }
    return key;
}

std::string keys_to_canonical_string(const std::vector<std::uint32_t>& keys, int K) {
    std::string out;
    for (std::size_t j = 0; j < keys.size(); ++j) {
        if (j) out += '/';
        for (int i = 0; i < K; ++i) {
            out += ((keys[j] >> (K - 1 - i)) & 1u) ? '1' : '0';
        }
    }
    return out;
}

/**
 * Minimal sorted row-key vector over all column permutations. For a fixed
 * column permutation the best row permutation simply sorts the row strings,
 * so the search space is K! column orders only.
 */
std::vector<std::uint32_t> canonical_keys(const Topology& topo) {
    const int K = topo.K;
    std::vector<int> perm(static_cast<std::size_t>(K));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cand(static_cast<std::size_t>(K));
    do {
        for (int j = 0; j < K; ++j) {
            cand[static_cast<std::size_t>(j)] =
                row_key(topo.transmit[static_cast<std::size_t>(j)], perm, K);
        }
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

Topology Topology::from_rows(int K, const std::vector<std::uint32_t>& rows) {
    if (K <= 0 || K > 32) throw ParseError(ParseError::Kind::kMissingSize, 0,
                                           "cell count must be in 1..32");
    if (static_cast<int>(rows.size()) != K) {
        throw ParseError(ParseError::Kind::kRowCount, static_cast<int>(rows.size()),
                         "expected " + std::to_string(K) + " rows, got " +
                             std::to_string(rows.size()));
    }
    Topology t;
    t.K = K;
    t.transmit = rows;
    t.receive.assign(static_cast<std::size_t>(K), 0);
    for (int j = 0; j < K; ++j) {
        const std::uint32_t row = rows[static_cast<std::size_t>(j)];
        if (row == 0) {
            throw ParseError(ParseError::Kind::kEmptyRow, j + 1,
                             "receiver " + std::to_string(j + 1) +
                                 " hears no transmitter");
        }
        if (row & ~t.full_mask()) {
            throw ParseError(ParseError::Kind::kRowLength, j + 1,
                             "row " + std::to_string(j + 1) + " is wider than K");
        }
        for (int i = 0; i < K; ++i) {
            if ((row >> i) & 1u) t.receive[static_cast<std::size_t>(i)] |= 1u << j;
        }
    }
    for (int i = 0; i < K; ++i) {
        if (t.receive[static_cast<std::size_t>(i)] == 0) {
            throw ParseError(ParseError::Kind::kEmptyColumn, i + 1,
                             "transmitter " + std::to_string(i + 1) +
                                 " reaches no receiver");
        }
    }
    return t;
}

Topology parse_topology(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const std::size_t last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    if (lines.empty()) {
        throw ParseError(ParseError::Kind::kMissingSize, 0, "empty input");
    }
    int K = 0;
    try {
        std::size_t pos = 0;
        K = std::stoi(lines[0], &pos);
        if (pos != lines[0].size()) K = 0;
    } catch (const std::exception&) {
        K = 0;
    }
    if (K <= 0 || K > 32) {
        throw ParseError(ParseError::Kind::kMissingSize, 0,
                         "first line must be a cell count in 1..32, got '" +
                             lines[0] + "'");
    }
    if (static_cast<int>(lines.size()) - 1 != K) {
        throw ParseError(ParseError::Kind::kRowCount,
                         static_cast<int>(lines.size()) - 1,
                         std::to_string(lines.size() - 1) + " rows given for K=" +
                             std::to_string(K));
    }
    std::vector<std::uint32_t> rows;
    for (int j = 0; j < K; ++j) {
        const std::string& r = lines[static_cast<std::size_t>(j) + 1];
        if (static_cast<int>(r.size()) != K) {
            throw ParseError(ParseError::Kind::kRowLength, j + 1,
                             "row " + std::to_string(j + 1) + " has " +
                                 std::to_string(r.size()) + " characters, expected " +
                                 std::to_string(K));
        }
        std::uint32_t mask = 0;
        for (int i = 0; i < K; ++i) {
            const char c = r[static_cast<std::size_t>(i)];
            if (c == '1') {
                mask |= 1u << i;
            } else if (c != '0') {
                throw ParseError(ParseError::Kind::kBadCharacter, i + 1,
                                 std::string("row ") + std::to_string(j + 1) +
                                     ", column " + std::to_string(i + 1) +
                                     ": character '" + c + "' is not 0/1");
            }
        }
        rows.push_back(mask);
    }
    return Topology::from_rows(K, rows);
}

std::string render_topology(const Topology& topo) {
    std::string out = std::to_string(topo.K);
    for (int j = 0; j < topo.K; ++j) {
        out += '\n';
        out += row_to_string(topo.transmit[static_cast<std::size_t>(j)], topo.K);
    }
    out += '\n';
    return out;
}

std::string canonical_key(const Topology& topo) {
    if (topo.K > kCanonicalMaxK) {
        throw GuardError("canonical_key supports K <= " +
                         std::to_string(kCanonicalMaxK) + ", got K=" +
                         std::to_string(topo.K));
    }
    return keys_to_canonical_string(canonical_keys(topo), topo.K);
}

Topology make_regular(int K, int d) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(K), 0);
    for (int j = 0; j < K; ++j) {
        for (int s = 0; s < d; ++s) {
            rows[static_cast<std::size_t>(j)] |= 1u << ((j + s) % K);
        }
    }
    return Topology::from_rows(K, rows);
}

Topology make_triangular(int K) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(K), 0);
    for (int j = 0; j < K; ++j) {
        rows[static_cast<std::size_t>(j)] = (j == 31) ? ~0u : ((1u << (j + 1)) - 1u);
    }
    return Topology::from_rows(K, rows);
}

TopologyClass classify(const Topology& topo) {
    const int K = topo.K;
    TopologyClass result;
    result.canonical_key = canonical_key(topo);

    // Reference keys per (K, d) and per K are cheap but not free; cache them.
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, std::string> regular_cache;
    static std::map<int, std::string> triangular_cache;

    result.fully_connected =
        std::all_of(topo.transmit.begin(), topo.transmit.end(),
                    [&](std::uint32_t r) { return r == topo.full_mask(); });

    // A regular network has constant row and column sums equal to d.
    const int d = std::popcount(topo.transmit[0]);
    const bool uniform =
        std::all_of(topo.transmit.begin(), topo.transmit.end(),
                    [&](std::uint32_t r) { return std::popcount(r) == d; }) &&
        std::all_of(topo.receive.begin(), topo.receive.end(),
                    [&](std::uint32_t c) { return std::popcount(c) == d; });
    if (uniform) {
        std::string ref;
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = regular_cache.find({K, d});
            if (it != regular_cache.end()) ref = it->second;
        }
        if (ref.empty()) {
            ref = canonical_key(make_regular(K, d));
            std::lock_guard<std::mutex> lock(cache_mutex);
            regular_cache[{K, d}] = ref;
        }
        if (result.canonical_key == ref) result.regular = {K, d};
    }

    // Triangular: row sums must be a permutation of 1..K; then compare keys.
    std::vector<int> sums;
    for (std::uint32_t r : topo.transmit) sums.push_back(std::popcount(r));
    std::sort(sums.begin(), sums.end());
    bool tri_shape = true;
    for (int j = 0; j < K; ++j) tri_shape &= sums[static_cast<std::size_t>(j)] == j + 1;
    if (tri_shape) {
        std::string ref;
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = triangular_cache.find(K);
            if (it != triangular_cache.end()) ref = it->second;
        }
        if (ref.empty()) {
            ref = canonical_key(make_triangular(K));
            std::lock_guard<std::mutex> lock(cache_mutex);
            triangular_cache[K] = ref;
        }
        result.triangular = result.canonical_key == ref;
    }
    return result;
}

std::vector<Topology> enumerate_topologies(int K) {
    if (K <= 0 || K > kEnumerateMaxK) {
        throw GuardError("enumerate_topologies supports K in 1.." +
                         std::to_string(kEnumerateMaxK) + ", got K=" +
                         std::to_string(K));
    }
    const std::uint32_t full = (1u << K) - 1u;
    std::set<std::string> keys;
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(K));

    // Row order is free, so scanning non-decreasing row masks visits every
    // isomorphism class at least once; the canonical key dedups the rest.
    const auto recurse = [&](auto&& self, int depth, std::uint32_t min_row,
                             std::uint32_t seen) -> void {
        if (depth == K) {
            if (seen != full) return;  // some transmitter unused
            keys.insert(canonical_key(Topology::from_rows(K, rows)));
            return;
        }
        for (std::uint32_t r = min_row; r <= full; ++r) {
            rows[static_cast<std::size_t>(depth)] = r;
            self(self, depth + 1, r, seen | r);
        }
    };
    recurse(recurse, 0, 1, 0);

    std::vector<Topology> out;
    for (const std::string& key : keys) {
        std::vector<std::uint32_t> kr(static_cast<std::size_t>(K), 0);
        int j = 0, i = 0;
        for (char c : key) {
            if (c == '/') {
                ++j;
                i = 0;
                continue;
            }
            if (c == '1') kr[static_cast<std::size_t>(j)] |= 1u << i;
            ++i;
        }
        out.push_back(Topology::from_rows(K, kr));
    }
    return out;
}

Topology permute(const Topology& topo, const std::vector<int>& rx_perm,
                 const std::vector<int>& tx_perm) {
    const int K = topo.K;
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(K), 0);
    for (int j = 0; j < K; ++j) {
        const std::uint32_t src =
            topo.transmit[static_cast<std::size_t>(rx_perm[static_cast<std::size_t>(j)])];
        for (int i = 0; i < K; ++i) {
            if ((src >> tx_perm[static_cast<std::size_t>(i)]) & 1u) {
                rows[static_cast<std::size_t>(j)] |= 1u << i;
            }
        }
    }
    return Topology::from_rows(K, rows);
}

}  // namespace timcomp
