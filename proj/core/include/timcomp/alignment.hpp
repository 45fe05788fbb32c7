#ifndef TIMCOMP_ALIGNMENT_HPP
#define TIMCOMP_ALIGNMENT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "timcomp/rational.hpp"
#include "timcomp/scheme.hpp"
#include "timcomp/topology.hpp"

namespace timcomp {

/**
 * The alignment-feasible graph on messages: {i, j} is an edge iff T_i and
 * T_j are mutually non-nested, i.e. the two messages can share a subspace
 * without blocking each other's decoding.
 */
struct AlignmentFeasibleGraph {
    int K = 0;
    std::vector<std::uint32_t> adjacency;     // adjacency[v] bitmask
    std::vector<std::pair<int, int>> edges;   // 0-based, i < j, sorted
};

AlignmentFeasibleGraph build_afg(const Topology& topo);

/**
 * Binary bookkeeping matrix for an alignment scheme: entry (k, j) = 1 marks
 * receiver-position k as blind to the j-th aligned subspace. q (the minimum
 * row sum) is the number of extension dimensions the scheme saves.
 */
struct NonConflictMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::uint8_t>> a;
    int q = 0;

    bool operator==(const NonConflictMatrix&) const = default;
};

/**
 * Cycle-form non-conflict matrix: column j belongs to the cycle edge
 * (i_j, i_{j+1}), row k to receiver i_k (`cycle` lists messages 0-based in
 * cycle order). Entries are set where both one-sided witness sets escape
 * T_{i_k}; a column is then zeroed when neither side retains a witness
 * avoiding every marked receiver at once. Throws if the cycle is not
 * Hamiltonian in the AFG.
 */
NonConflictMatrix non_conflict_matrix_cycle(const Topology& topo,
                                            const std::vector<int>& cycle);

struct HamiltonianCertificate {
    std::vector<int> cycle;  // 0-based messages, starts at 0
    NonConflictMatrix matrix;
    Rational dof;            // 2/(K-q)
    int coherence_required = 0;  // K-q
};

/**
 * Best Hamiltonian alignment certificate: maximizes q over every
 * Hamiltonian cycle of the AFG, ties broken by lexicographically smallest
 * cycle. On (K, d)-circulant-band topologies with d <= K-1 the cycle-form
 * matrix can stall below the closed-form scheme; there the certificate
 * carries the identity cycle and that scheme's absence matrix, reaching
 * q = K-d-1. None when the AFG has no Hamiltonian cycle. Guarded at K <= 9.
 */
std::optional<HamiltonianCertificate> best_hamiltonian(const Topology& topo);

/// 2/K when the AFG has a perfect matching (K even), otherwise none.
std::optional<Rational> perfect_matching_dof(const Topology& topo);

struct PartitionCertificate {
    std::vector<std::vector<int>> portions;  // 0-based, sorted
    NonConflictMatrix matrix;                // K x kappa
    int q = 0;
    Rational dof;                // 1/(kappa - q)
    int coherence_required = 0;  // kappa - q
};

/**
 * Partition-form non-conflict matrix for a proper partition (each member of
 * each portion keeps a private transmitter against the rest of its
 * portion).
 */
NonConflictMatrix non_conflict_matrix_partition(
    const Topology& topo, const std::vector<std::vector<int>>& portions);

/// True iff every portion satisfies the private-transmitter condition.
bool partition_proper(const Topology& topo,
                      const std::vector<std::vector<int>>& portions);

/**
 * Best proper-partition certificate: maximizes 1/(kappa - q) over all
 * proper partitions; ties prefer smaller kappa, then lexicographically
 * greatest portions. None when no proper partition exists (never happens: singletons
 * are always proper). Guarded at K <= 8.
 */
std::optional<PartitionCertificate> best_partition(const Topology& topo);

/**
 * Closed-form DoF for (K, d)-regular topologies: 2/(d+1) for d <= K-1 and
 * 1/K for d = K; none when the topology is not regular (or K is above the
 * classification guard).
 */
std::optional<Rational> regular_dof(const Topology& topo);

/// Realizes a Hamiltonian certificate as an explicit scheme in n = K-q.
SchemeDescriptor synthesize_scheme(const Topology& topo,
                                   const HamiltonianCertificate& cert);

/// Realizes a partition certificate as an explicit scheme in n = kappa-q.
SchemeDescriptor synthesize_scheme(const Topology& topo,
                                   const PartitionCertificate& cert);

/// Realizes the regular-network scheme (n = d+1; TDMA when d = K).
SchemeDescriptor synthesize_regular_scheme(const Topology& topo);

}  // namespace timcomp

#endif  // TIMCOMP_ALIGNMENT_HPP
