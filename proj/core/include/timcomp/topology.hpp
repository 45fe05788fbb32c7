#ifndef TIMCOMP_TOPOLOGY_HPP
#define TIMCOMP_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "timcomp/errors.hpp"

namespace timcomp {

/**
 * A K-cell network topology: the K x K binary connectivity matrix B with
 * B[j][i] = 1 iff Transmitter i is connected to Receiver j.
 *
 * Rows (transmit sets T_j, "which transmitters does Receiver j hear") are
 * stored as bitmasks with bit i-1 standing for Transmitter i. Receive sets
 * R_i (column supports) are kept in sync. All indices are 0-based
 * internally; I/O and error messages are 1-based.
 */
struct Topology {
    int K = 0;
    std::vector<std::uint32_t> transmit;  // transmit[j] = T_{j+1} as a bitmask
    std::vector<std::uint32_t> receive;   // receive[i] = R_{i+1} as a bitmask

    bool connected(int rx, int tx) const {
        return (transmit[rx] >> tx) & 1u;
    }
    std::uint32_t full_mask() const {
        return K == 32 ? ~0u : ((1u << K) - 1u);
    }

    bool operator==(const Topology&) const = default;

    /**
     * Builds a topology from row bitmasks, deriving the receive sets and
     * validating that no row or column is empty (every receiver must hear
     * somebody and every transmitter must reach somebody).
     */
    static Topology from_rows(int K, const std::vector<std::uint32_t>& rows);
};

/// Classification of a topology up to independent row/column permutation.
struct TopologyClass {
    /// Present iff the matrix is permutation-equivalent to the circulant
    /// band matrix with T_j = {j, ..., j+d-1} (mod K); value is (K, d).
    std::optional<std::pair<int, int>> regular;
    /// Permutation-equivalent to the lower-triangular all-ones matrix.
    bool triangular = false;
    /// All-ones matrix (implies regular with d = K).
    bool fully_connected = false;
    /// Lexicographic minimum of B over all row and column permutations,
    /// rendered as '/'-joined rows of '0'/'1'. Equal keys <=> isomorphic.
    std::string canonical_key;
};

/**
 * Parses the canonical text format: line 1 holds K, lines 2..K+1 hold K
 * characters each from {0,1} (row j = Receiver j). '#'-prefixed lines are
 * comments; surrounding whitespace is ignored. Throws ParseError with a
 * 1-based row/column index on malformed input.
 */
Topology parse_topology(const std::string& text);

/// Inverse of parse_topology (no comments, '\n'-separated).
std::string render_topology(const Topology& topo);

/**
 * Lexicographically minimal row-major rendering of B over all row and
 * column permutations. Exhaustive over column permutations (rows are then
 * optimal when sorted), so guarded at K <= 8.
 */
std::string canonical_key(const Topology& topo);

/// Classifies regular/triangular/fully-connected and computes the key (K <= 8).
TopologyClass classify(const Topology& topo);

/**
 * One representative per isomorphism class among all valid K-cell
 * topologies, sorted by canonical key. Guarded at K <= 5.
 */
std::vector<Topology> enumerate_topologies(int K);

/**
 * Relabels receivers and transmitters: receiver j of the result is receiver
 * rx_perm[j] of the input, transmitter i of the result is transmitter
 * tx_perm[i] of the input (both 0-based permutations of 0..K-1).
 */
Topology permute(const Topology& topo, const std::vector<int>& rx_perm,
                 const std::vector<int>& tx_perm);

/// Reference (K,d)-regular topology with T_j = {j, ..., j+d-1} (mod K).
Topology make_regular(int K, int d);

/// Triangular topology with T_j = {1, ..., j}.
Topology make_triangular(int K);

}  // namespace timcomp

#endif  // TIMCOMP_TOPOLOGY_HPP
