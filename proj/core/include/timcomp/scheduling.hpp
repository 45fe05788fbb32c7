#ifndef TIMCOMP_SCHEDULING_HPP
#define TIMCOMP_SCHEDULING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "timcomp/rational.hpp"
#include "timcomp/topology.hpp"

namespace timcomp {

/**
 * The distance-2 conflict structure on the network's directed links: the
 * square of the line graph, with links grouped into one cluster per
 * receiver. Independent sets are exactly the link sets schedulable in one
 * slot without interference.
 */
struct ConflictGraph {
    struct Link {
        int tx = 0;  // 0-based transmitter
        int rx = 0;  // 0-based receiver
        bool operator==(const Link&) const = default;
    };

    std::vector<Link> links;                 // sorted by (rx, tx)
    std::vector<std::vector<char>> adjacent;  // symmetric, no self-loops
    std::vector<std::vector<int>> clusters;   // clusters[j] = link ids of rx j
};

/// Builds the conflict graph; deterministic link order (by receiver, then
/// transmitter).
ConflictGraph build_conflict_graph(const Topology& topo);

/**
 * A receiver set X that is jointly servable in one slot: every k in X keeps
 * a private transmitter z_k inside T_k but outside every other member's
 * transmit set. Witnesses are the smallest such transmitters.
 */
struct Hyperedge {
    std::uint32_t receivers = 0;             // bitmask over receivers
    std::vector<std::pair<int, int>> witnesses;  // (receiver, transmitter), 0-based

    bool operator==(const Hyperedge&) const = default;
};

/// True iff every member of `receivers` has a private-transmitter witness.
bool hyperedge_feasible(const Topology& topo, std::uint32_t receivers);

/**
 * All inclusion-maximal feasible hyperedges in increasing bitmask order.
 * Feasibility is downward closed, so these generate every feasible edge.
 * Guarded at K <= 16.
 */
std::vector<Hyperedge> enumerate_maximal_hyperedges(const Topology& topo);

/// A fractional cover: weighted hyperedges delivering every receiver >= 1.
struct FractionalCover {
    std::vector<std::pair<Hyperedge, Rational>> entries;  // weights in (0,1]
    Rational value;                                       // sum of weights
};

/**
 * Optimal fractional covering number over maximal hyperedges, solved with
 * the exact rational simplex. The achievable symmetric DoF is 1/value.
 */
FractionalCover fractional_cover(const Topology& topo);

/**
 * Fractional selective chromatic number of the clustered conflict graph,
 * computed by an independent path: enumerate maximal independent sets of
 * the conflict graph, project each onto the clusters it touches, and solve
 * the covering LP over those cluster sets. Guarded at K <= 12.
 */
Rational selective_chromatic(const Topology& topo);

/**
 * Exhaustive oracle: can a multiset of n one-slot hyperedges deliver every
 * receiver at least t times? Guarded at K <= 5, n <= 8; used to validate
 * the LP from below and above at small scale.
 */
bool brute_force_t_fold_cover(const Topology& topo, int t, int n);

}  // namespace timcomp

#endif  // TIMCOMP_SCHEDULING_HPP
