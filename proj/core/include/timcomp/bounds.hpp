#ifndef TIMCOMP_BOUNDS_HPP
#define TIMCOMP_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "timcomp/alignment.hpp"
#include "timcomp/rational.hpp"
#include "timcomp/scheduling.hpp"
#include "timcomp/topology.hpp"

namespace timcomp {

/**
 * Witness that receiver subset S can be reconstructed from the initial
 * generator I_0: the remaining rows of S join one at a time, each passing
 * the signed-rowspan test against B_{I_0} stacked with identity rows for
 * the transmitters already resolvable at that step. Yields the outer bound
 * |I_0| / |S| on the symmetric DoF.
 */
struct GeneratorCertificate {
    std::uint32_t S = 0;    // receiver subset (bitmask)
    std::uint32_t I0 = 0;   // initial generator, subset of S
    std::vector<int> sequence;  // generated receivers (0-based) in join order
    std::map<int, std::vector<int>> sign_patterns;  // receiver -> {+1,-1}^K
    Rational bound;
};

/// Witness for the compound-settings bound (K-|S'|)/(2K-|S'|-|S|).
struct CompoundCertificate {
    std::uint32_t S = 0;        // covers all transmitters
    std::uint32_t S_prime = 0;  // receivers reached only from S
    Rational bound;
};

/**
 * Searches for a diagonal sign pattern D (entries +-1, free only on the
 * row's support) such that row * D lies in the rational row span of
 * `basis`. Entries are small integers; ranks are computed exactly.
 */
std::optional<std::vector<int>> spans_with_sign(
    const std::vector<int>& row, const std::vector<std::vector<int>>& basis);

/**
 * Greedy fixpoint of the generator recursion: starting from G = I_0,
 * repeatedly mark transmitters whose in-S receivers are all generated and
 * add every row of S that passes the signed-rowspan test. Returns the
 * final generated set (and optionally the join order / sign patterns).
 */
std::uint32_t generator_closure(const Topology& topo, std::uint32_t S,
                                std::uint32_t I0,
                                GeneratorCertificate* cert = nullptr);

/**
 * min |I_0|/|S| over all S and I_0 subsets whose closure covers S; the
 * certificate is the minimizer with the element-wise lexicographically
 * smallest I_0, then smallest S. Guarded at K <= 8.
 */
std::pair<Rational, GeneratorCertificate> generator_bound(const Topology& topo);

/**
 * min (K-|S'|)/(2K-|S'|-|S|) over receiver sets S whose transmit sets cover
 * every transmitter, capped at 1; certificate is the smallest-bitmask
 * minimizer. Guarded at K <= 16.
 */
std::pair<Rational, CompoundCertificate> compound_bound(const Topology& topo);

/// Index-coding side information: S_k = union of R_j over j not heard by k.
std::vector<std::uint32_t> side_info_sets(const Topology& topo);

/**
 * Directed bipartite demand graph of the index-coding reduction: forward
 * edges message -> its receiver, backward edges receiver -> each message in
 * its side information.
 */
struct DemandGraph {
    int K = 0;
    std::vector<std::uint32_t> side_info;  // backward edges of receiver j
};

DemandGraph build_demand_graph(const Topology& topo);
bool demand_graph_acyclic(const DemandGraph& g);

/**
 * True iff TDMA (d_sym = 1/K) is optimal: the demand graph is acyclic.
 * Also computes AFG emptiness and insists the two criteria agree.
 */
bool tdma_optimal(const Topology& topo);

/// Analysis method identifiers, in reporting order.
extern const std::vector<std::string> kAchievableMethods;  // coloring..regular
extern const std::vector<std::string> kOuterMethods;       // generator..tdma

struct AnalyzeOptions {
    /// Empty = run everything; otherwise only the listed methods.
    std::set<std::string> methods;
    /// When positive, raises every per-method K guard to this value.
    int max_k_override = 0;
};

/**
 * Aggregated result: every applicable achievable and outer value with its
 * certificate, the best of each side (outer always includes the trivial
 * bound 1), and the tightness flag. Guard-exceeded methods are recorded in
 * `skipped`, never silently dropped.
 */
struct BoundReport {
    std::optional<Rational> coloring, covering, hamiltonian, matching, partition,
        regular;                                     // achievable
    std::optional<Rational> generator, compound, tdma;  // outer
    std::set<std::string> computed;  // methods that actually ran
    std::set<std::string> skipped;   // selected but over a guard

    std::optional<FractionalCover> cover_certificate;
    std::optional<HamiltonianCertificate> hamiltonian_certificate;
    std::optional<PartitionCertificate> partition_certificate;
    std::optional<GeneratorCertificate> generator_certificate;
    std::optional<CompoundCertificate> compound_certificate;
    bool tdma_is_optimal = false;

    std::optional<Rational> best_achievable;  // max over achievable methods
    Rational best_outer = 1;                  // min over outer methods and 1
    bool tight = false;
};

/// Runs every requested bound method within its guards and aggregates.
/// Throws InvariantError if any achievable value exceeds any outer value.
BoundReport analyze(const Topology& topo, const AnalyzeOptions& options = {});

}  // namespace timcomp

#endif  // TIMCOMP_BOUNDS_HPP
