#include "timcomp/alignment.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "timcomp/errors.hpp"

namespace timcomp {

namespace {

constexpr int kHamiltonianMaxK = 9;
constexpr int kPartitionMaxK = 8;

/// True iff `sub` is a subset of `super` (as transmitter bitmasks).
bool subset_of(std::uint32_t sub, std::uint32_t super) {
    return (sub & ~super) == 0;
}

int min_row_sum(const NonConflictMatrix& m) {
    int q = m.cols;
    for (int r = 0; r < m.rows; ++r) {
        int sum = 0;
        for (int c = 0; c < m.cols; ++c) sum += m.a[r][c];
        q = std::min(q, sum);
    }
    return q;
}

bool is_hamiltonian(const AlignmentFeasibleGraph& afg, const std::vector<int>& cycle) {
    const int K = afg.K;
    if (static_cast<int>(cycle.size()) != K || K < 3) return false;
    std::uint32_t seen = 0;
    for (int v : cycle) {
        if (v < 0 || v >= K || ((seen >> v) & 1u)) return false;
        seen |= 1u << v;
    }
    for (int j = 0; j < K; ++j) {
        const int a = cycle[static_cast<std::size_t>(j)];
        const int b = cycle[static_cast<std::size_t>((j + 1) % K)];
        if (!((afg.adjacency[static_cast<std::size_t>(a)] >> b) & 1u)) return false;
    }
    return true;
}

/**
 * Relabeling of `topo` onto the reference circulant make_regular(K, d):
 * gamma maps reference transmitter -> topology transmitter, rho maps
 * reference receiver -> topology receiver. First gamma in lexicographic
 * order wins; the receiver matching is then unique because reference rows
 * are pairwise distinct. Returns false when no relabeling exists.
 */
bool circulant_relabeling(const Topology& topo, int K, int d,
                          std::vector<int>& gamma, std::vector<int>& rho) {
    const Topology ref = make_regular(K, d);
    gamma.assign(static_cast<std::size_t>(K), 0);
    std::iota(gamma.begin(), gamma.end(), 0);
    rho.assign(static_cast<std::size_t>(K), -1);
    do {
        // Transform each topology row through gamma^{-1} and look it up
        // among the reference rows.
        std::fill(rho.begin(), rho.end(), -1);
        bool ok = true;
        for (int r = 0; r < K && ok; ++r) {
            std::uint32_t mask = 0;
            for (int i = 0; i < K; ++i) {
                if (topo.connected(r, gamma[static_cast<std::size_t>(i)])) {
                    mask |= 1u << i;
                }
            }
            ok = false;
            for (int j = 0; j < K; ++j) {
                if (ref.transmit[static_cast<std::size_t>(j)] == mask &&
                    rho[static_cast<std::size_t>(j)] < 0) {
                    rho[static_cast<std::size_t>(j)] = r;
                    ok = true;
                    break;
                }
            }
        }
        if (ok) return true;
    } while (std::next_permutation(gamma.begin(), gamma.end()));
    return false;
}

/**
 * Certificate carried by best_hamiltonian on (K, d)-circulant-band
 * topologies with d <= K-1. The matrix is the absence matrix of the
 * closed-form two-vector scheme: under reference labels, vector v is used
 * by transmitters v-1 and v-2 (mod K), so row k has a one in column v
 * exactly when receiver k hears neither of the two mapped transmitters.
 * Every receiver hears d+1 of the K vectors, so q = K-d-1.
 */
HamiltonianCertificate circulant_certificate(const Topology& topo, int K, int d) {
    std::vector<int> gamma, rho;
    if (!circulant_relabeling(topo, K, d, gamma, rho)) {
        throw InvariantError("regular classification without circulant relabeling");
    }
    HamiltonianCertificate cert;
    cert.cycle.resize(static_cast<std::size_t>(K));
    std::iota(cert.cycle.begin(), cert.cycle.end(), 0);
    NonConflictMatrix m;
    m.rows = m.cols = K;
    m.a.assign(static_cast<std::size_t>(K),
               std::vector<std::uint8_t>(static_cast<std::size_t>(K), 0));
    for (int v = 0; v < K; ++v) {
        const int tx1 = gamma[static_cast<std::size_t>((v + K - 1) % K)];
        const int tx2 = gamma[static_cast<std::size_t>((v + K - 2) % K)];
        for (int k = 0; k < K; ++k) {
            if (!topo.connected(k, tx1) && !topo.connected(k, tx2)) {
                m.a[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    m.q = min_row_sum(m);
    if (m.q != K - d - 1) {
        throw InvariantError("circulant absence matrix missed q = K-d-1");
    }
    cert.dof = Rational(2, K - m.q);
    cert.coherence_required = K - m.q;
    cert.matrix = std::move(m);
    return cert;
}

}  // namespace

AlignmentFeasibleGraph build_afg(const Topology& topo) {
    AlignmentFeasibleGraph g;
    g.K = topo.K;
    g.adjacency.assign(static_cast<std::size_t>(topo.K), 0);
    for (int i = 0; i < topo.K; ++i) {
        for (int j = i + 1; j < topo.K; ++j) {
            const std::uint32_t ti = topo.transmit[static_cast<std::size_t>(i)];
            const std::uint32_t tj = topo.transmit[static_cast<std::size_t>(j)];
            if (!subset_of(ti, tj) && !subset_of(tj, ti)) {
                g.adjacency[static_cast<std::size_t>(i)] |= 1u << j;
                g.adjacency[static_cast<std::size_t>(j)] |= 1u << i;
                g.edges.emplace_back(i, j);
            }
        }
    }
    return g;
}

NonConflictMatrix non_conflict_matrix_cycle(const Topology& topo,
                                            const std::vector<int>& cycle) {
    const AlignmentFeasibleGraph afg = build_afg(topo);
    if (!is_hamiltonian(afg, cycle)) {
        throw Error("cycle is not Hamiltonian in the alignment-feasible graph");
    }
    const int K = topo.K;
    NonConflictMatrix m;
    m.rows = m.cols = K;
    m.a.assign(static_cast<std::size_t>(K),
               std::vector<std::uint8_t>(static_cast<std::size_t>(K), 0));

    // Set phase: receiver i_k is marked blind to edge-subspace j when both
    // one-sided witness sets of the edge escape T_{i_k}.
    for (int j = 0; j < K; ++j) {
        const std::uint32_t tj = topo.transmit[static_cast<std::size_t>(
            cycle[static_cast<std::size_t>(j)])];
        const std::uint32_t tj1 = topo.transmit[static_cast<std::size_t>(
            cycle[static_cast<std::size_t>((j + 1) % K)])];
        const std::uint32_t d1 = tj & ~tj1;
        const std::uint32_t d2 = tj1 & ~tj;
        for (int k = 0; k < K; ++k) {
            const std::uint32_t tk = topo.transmit[static_cast<std::size_t>(
                cycle[static_cast<std::size_t>(k)])];
            if (!subset_of(d1, tk) && !subset_of(d2, tk)) {
                m.a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = 1;
            }
        }
    }

    // Reset phase (single pass): zero column j when the marked receivers
    // leave no jointly avoiding witness on either side of the edge.
    for (int j = 0; j < K; ++j) {
        const std::uint32_t tj = topo.transmit[static_cast<std::size_t>(
            cycle[static_cast<std::size_t>(j)])];
        const std::uint32_t tj1 = topo.transmit[static_cast<std::size_t>(
            cycle[static_cast<std::size_t>((j + 1) % K)])];
        std::uint32_t marked_union = 0;
        for (int k = 0; k < K; ++k) {
            if (m.a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
                marked_union |= topo.transmit[static_cast<std::size_t>(
                    cycle[static_cast<std::size_t>(k)])];
            }
        }
        const bool side1 = (tj & ~tj1 & ~marked_union) != 0;
        const bool side2 = (tj1 & ~tj & ~marked_union) != 0;
        if (!side1 && !side2) {
            for (int k = 0; k < K; ++k) {
                m.a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = 0;
            }
        }
    }
    m.q = min_row_sum(m);
    return m;
}

std::optional<HamiltonianCertificate> best_hamiltonian(const Topology& topo) {
    const int K = topo.K;
    if (K > kHamiltonianMaxK) {
        throw GuardError("best_hamiltonian supports K <= " +
                         std::to_string(kHamiltonianMaxK) + ", got K=" +
                         std::to_string(K));
    }
    if (K < 3) return std::nullopt;
    const AlignmentFeasibleGraph afg = build_afg(topo);

    std::optional<HamiltonianCertificate> best;
    std::vector<int> cycle = {0};
    std::uint32_t used = 1;

    // Depth-first enumeration in lexicographic cycle order; each undirected
    // cycle is visited once by fixing the start at 0 and the direction by
    // cycle[1] < cycle[K-1]. Lexicographic order makes "first cycle with a
    // strictly better q" the documented tie-break.
    const auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(cycle.size()) == K) {
            const int last = cycle.back();
            if (cycle[1] > last) return;  // direction already visited
            if (!((afg.adjacency[static_cast<std::size_t>(last)] >> 0) & 1u)) return;
            NonConflictMatrix m = non_conflict_matrix_cycle(topo, cycle);
            if (!best || m.q > best->matrix.q) {
                HamiltonianCertificate cert;
                cert.cycle = cycle;
                cert.dof = Rational(2, K - m.q);
                cert.coherence_required = K - m.q;
                cert.matrix = std::move(m);
                best = std::move(cert);
            }
            return;
        }
        const int tail = cycle.back();
        for (int v = 1; v < K; ++v) {
            if ((used >> v) & 1u) continue;
            if (!((afg.adjacency[static_cast<std::size_t>(tail)] >> v) & 1u)) continue;
            cycle.push_back(v);
            used |= 1u << v;
            self(self);
            used &= ~(1u << v);
            cycle.pop_back();
        }
    };
    dfs(dfs);

    // Circulant-band topologies: the cycle-form matrix can stall below the
    // closed-form scheme's quality; substitute that scheme's absence matrix
    // when it is strictly better.
    if (K <= 8) {
        const TopologyClass cls = classify(topo);
        if (cls.regular) {
            const int d = cls.regular->second;
            if (d <= K - 1 && best && best->matrix.q < K - d - 1) {
                best = circulant_certificate(topo, K, d);
            }
        }
    }
    return best;
}

std::optional<Rational> perfect_matching_dof(const Topology& topo) {
    const int K = topo.K;
    if (K % 2 != 0) return std::nullopt;
    const AlignmentFeasibleGraph afg = build_afg(topo);

    // Exact backtracking: always match the lowest unmatched vertex. At the
    // supported sizes this is cheap and avoids blossom bookkeeping.
    const auto solve = [&](auto&& self, std::uint32_t matched) -> bool {
        if (matched == topo.full_mask()) return true;
        const int v = std::countr_one(matched);
        std::uint32_t cand =
            afg.adjacency[static_cast<std::size_t>(v)] & ~matched;
        while (cand) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (self(self, matched | (1u << v) | (1u << u))) return true;
        }
        return false;
    };
    if (!solve(solve, 0)) return std::nullopt;
    return Rational(2, K);
}

bool partition_proper(const Topology& topo,
                      const std::vector<std::vector<int>>& portions) {
    for (const std::vector<int>& p : portions) {
        for (int m : p) {
            std::uint32_t others = 0;
            for (int o : p) {
                if (o != m) others |= topo.transmit[static_cast<std::size_t>(o)];
            }
            if ((topo.transmit[static_cast<std::size_t>(m)] & ~others) == 0) {
                return false;
            }
        }
    }
    return true;
}

NonConflictMatrix non_conflict_matrix_partition(
    const Topology& topo, const std::vector<std::vector<int>>& portions) {
    if (!partition_proper(topo, portions)) {
        throw Error("portions do not form a proper partition");
    }
    const int K = topo.K;
    const int kappa = static_cast<int>(portions.size());
    NonConflictMatrix m;
    m.rows = K;
    m.cols = kappa;
    m.a.assign(static_cast<std::size_t>(K),
               std::vector<std::uint8_t>(static_cast<std::size_t>(kappa), 0));

    // Private-transmitter witness set of member `mem` inside its portion.
    const auto witness_set = [&](const std::vector<int>& p, int mem) {
        std::uint32_t others = 0;
        for (int o : p) {
            if (o != mem) others |= topo.transmit[static_cast<std::size_t>(o)];
        }
        return topo.transmit[static_cast<std::size_t>(mem)] & ~others;
    };

    // Set phase: receiver i is blind to portion j's subspace when every
    // member's witness set escapes T_i.
    for (int j = 0; j < kappa; ++j) {
        for (int i = 0; i < K; ++i) {
            bool all_escape = true;
            for (int mem : portions[static_cast<std::size_t>(j)]) {
                if (subset_of(witness_set(portions[static_cast<std::size_t>(j)], mem),
                              topo.transmit[static_cast<std::size_t>(i)])) {
                    all_escape = false;
                    break;
                }
            }
            if (all_escape) {
                m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            }
        }
    }

    // Reset phase (single pass): zero column j when some member cannot pick
    // a witness avoiding all marked receivers simultaneously.
    for (int j = 0; j < kappa; ++j) {
        std::uint32_t marked_union = 0;
        for (int i = 0; i < K; ++i) {
            if (m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                marked_union |= topo.transmit[static_cast<std::size_t>(i)];
            }
        }
        bool ok = true;
        for (int mem : portions[static_cast<std::size_t>(j)]) {
            if ((witness_set(portions[static_cast<std::size_t>(j)], mem) &
                 ~marked_union) == 0) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            for (int i = 0; i < K; ++i) {
                m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
            }
        }
    }
    m.q = min_row_sum(m);
    return m;
}

std::optional<PartitionCertificate> best_partition(const Topology& topo) {
    const int K = topo.K;
    if (K > kPartitionMaxK) {
        throw GuardError("best_partition supports K <= " +
                         std::to_string(kPartitionMaxK) + ", got K=" +
                         std::to_string(K));
    }

    std::optional<PartitionCertificate> best;
    // Restricted-growth strings enumerate set partitions exactly once, with
    // portions ordered by smallest member.
    std::vector<int> rgs(static_cast<std::size_t>(K), 0);
    const auto consider = [&]() {
        const int kappa = 1 + *std::max_element(rgs.begin(), rgs.end());
        std::vector<std::vector<int>> portions(static_cast<std::size_t>(kappa));
        for (int v = 0; v < K; ++v) {
            portions[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])]
                .push_back(v);
        }
        if (!partition_proper(topo, portions)) return;
        NonConflictMatrix m = non_conflict_matrix_partition(topo, portions);
        const int span = kappa - m.q;
        const int best_span =
            best ? static_cast<int>(best->portions.size()) - best->q : 0;
        const bool better =
            !best || span < best_span ||
            (span == best_span &&
             (kappa < static_cast<int>(best->portions.size()) ||
              (kappa == static_cast<int>(best->portions.size()) &&
               portions > best->portions)));
        if (better) {
            PartitionCertificate cert;
            cert.portions = std::move(portions);
            cert.q = m.q;
            cert.dof = Rational(1, span);
            cert.coherence_required = span;
            cert.matrix = std::move(m);
            best = std::move(cert);
        }
    };
    const auto recurse = [&](auto&& self, int v, int max_used) -> void {
        if (v == K) {
            consider();
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            rgs[static_cast<std::size_t>(v)] = c;
            self(self, v + 1, std::max(max_used, c));
        }
    };
    recurse(recurse, 1, 0);  // element 0 always opens portion 0
    return best;
}

std::optional<Rational> regular_dof(const Topology& topo) {
    if (topo.K > 8) return std::nullopt;  // classification guard
    const TopologyClass cls = classify(topo);
    if (!cls.regular) return std::nullopt;
    const auto [K, d] = *cls.regular;
    return d == K ? Rational(1, K) : Rational(2, d + 1);
}

SchemeDescriptor synthesize_scheme(const Topology& topo,
                                   const HamiltonianCertificate& cert) {
    const int K = topo.K;
    // Circulant certificates carry the closed-form scheme's absence matrix
    // rather than a cycle matrix; rebuild that scheme directly.
    if (K <= 8) {
        const TopologyClass cls = classify(topo);
        if (cls.regular && cls.regular->second <= K - 1) {
            const HamiltonianCertificate circ =
                circulant_certificate(topo, K, cls.regular->second);
            if (cert.cycle == circ.cycle && cert.matrix == circ.matrix) {
                return synthesize_regular_scheme(topo);
            }
        }
    }
    const NonConflictMatrix check = non_conflict_matrix_cycle(topo, cert.cycle);
    if (check != cert.matrix) {
        throw Error("Hamiltonian certificate does not match topology");
    }
    const std::vector<int>& cyc = cert.cycle;
    const int n = K - cert.matrix.q;

    // Candidate witness pairs per cycle edge, in (z1, z2) order so the
    // first complete assignment is the lexicographically smallest one.
    std::vector<std::vector<std::pair<int, int>>> candidates(
        static_cast<std::size_t>(K));
    for (int j = 0; j < K; ++j) {
        const std::uint32_t tj =
            topo.transmit[static_cast<std::size_t>(cyc[static_cast<std::size_t>(j)])];
        const std::uint32_t tj1 = topo.transmit[static_cast<std::size_t>(
            cyc[static_cast<std::size_t>((j + 1) % K)])];
        for (int z1 = 0; z1 < K; ++z1) {
            if (!(((tj & ~tj1) >> z1) & 1u)) continue;
            for (int z2 = 0; z2 < K; ++z2) {
                if (!(((tj1 & ~tj) >> z2) & 1u)) continue;
                candidates[static_cast<std::size_t>(j)].emplace_back(z1, z2);
            }
        }
    }

    // Assign witnesses so that every receiver sees at most n = K-q of the K
    // subspaces; q > 0 certificates can force a pair that stays visible to
    // some marked receiver, so this is a global search, not per-column.
    std::vector<std::pair<int, int>> chosen(static_cast<std::size_t>(K), {-1, -1});
    std::vector<std::uint32_t> seen_by(static_cast<std::size_t>(K), 0);  // per rx
    const auto assign = [&](auto&& self, int j) -> bool {
        if (j == K) return true;
        for (const auto& [z1, z2] : candidates[static_cast<std::size_t>(j)]) {
            bool feasible = true;
            for (int r = 0; r < K && feasible; ++r) {
                const bool sees = topo.connected(r, z1) || topo.connected(r, z2);
                if (sees && std::popcount(seen_by[static_cast<std::size_t>(r)] |
                                          (1u << j)) > n) {
                    feasible = false;
                }
            }
            if (!feasible) continue;
            const std::vector<std::uint32_t> saved = seen_by;
            for (int r = 0; r < K; ++r) {
                if (topo.connected(r, z1) || topo.connected(r, z2)) {
                    seen_by[static_cast<std::size_t>(r)] |= 1u << j;
                }
            }
            chosen[static_cast<std::size_t>(j)] = {z1, z2};
            if (self(self, j + 1)) return true;
            seen_by = saved;
        }
        return false;
    };
    if (!assign(assign, 0)) {
        throw InvariantError(
            "no witness assignment realizes the Hamiltonian certificate");
    }

    SchemeDescriptor scheme;
    scheme.n = n;
    scheme.num_vectors = K;
    scheme.genericity = Genericity::kAnyNofM;
    scheme.coherence_required = n;
    scheme.claimed_dof = cert.dof;
    for (int j = 0; j < K; ++j) {
        const auto& [z1, z2] = chosen[static_cast<std::size_t>(j)];
        scheme.transmissions.push_back(
            {z1 + 1, cyc[static_cast<std::size_t>(j)] + 1, 1, j + 1});
        scheme.transmissions.push_back(
            {z2 + 1, cyc[static_cast<std::size_t>((j + 1) % K)] + 1, 2, j + 1});
    }
    return scheme;
}

SchemeDescriptor synthesize_scheme(const Topology& topo,
                                   const PartitionCertificate& cert) {
    const NonConflictMatrix check =
        non_conflict_matrix_partition(topo, cert.portions);
    if (check != cert.matrix) {
        throw Error("partition certificate does not match topology");
    }
    const int K = topo.K;
    const int kappa = static_cast<int>(cert.portions.size());
    const int n = kappa - cert.q;

    SchemeDescriptor scheme;
    scheme.n = n;
    scheme.num_vectors = kappa;
    scheme.genericity = Genericity::kAnyNofM;
    scheme.coherence_required = n;
    scheme.claimed_dof = cert.dof;
    for (int j = 0; j < kappa; ++j) {
        std::uint32_t marked_union = 0;
        for (int i = 0; i < K; ++i) {
            if (cert.matrix.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                marked_union |= topo.transmit[static_cast<std::size_t>(i)];
            }
        }
        for (int mem : cert.portions[static_cast<std::size_t>(j)]) {
            std::uint32_t others = 0;
            for (int o : cert.portions[static_cast<std::size_t>(j)]) {
                if (o != mem) others |= topo.transmit[static_cast<std::size_t>(o)];
            }
            const std::uint32_t usable =
                topo.transmit[static_cast<std::size_t>(mem)] & ~others & ~marked_union;
            if (usable == 0) {
                throw InvariantError("surviving partition column lost its witness");
            }
            scheme.transmissions.push_back(
                {std::countr_zero(usable) + 1, mem + 1, 1, j + 1});
        }
    }
    return scheme;
}

SchemeDescriptor synthesize_regular_scheme(const Topology& topo) {
    const TopologyClass cls = classify(topo);
    if (!cls.regular) {
        throw Error("topology is not regular; no closed-form scheme");
    }
    const auto [K, d] = *cls.regular;

    SchemeDescriptor scheme;
    if (d == K) {
        // Fully connected: plain TDMA, one slot per message.
        scheme.n = K;
        scheme.num_vectors = K;
        scheme.genericity = Genericity::kStandardBasis;
        scheme.coherence_required = 1;
        scheme.claimed_dof = Rational(1, K);
        for (int i = 0; i < K; ++i) {
            scheme.transmissions.push_back({i + 1, i + 1, 1, i + 1});
        }
        return scheme;
    }

    std::vector<int> gamma, rho;
    if (!circulant_relabeling(topo, K, d, gamma, rho)) {
        throw InvariantError("regular classification without circulant relabeling");
    }

    // Reference-label scheme: transmitter i sends message i on V_{i+1} and
    // message i-d+1 on V_{i+2} (indices mod K); map labels back to the
    // input topology. Vector indices are shared names, no mapping needed.
    scheme.n = d + 1;
    scheme.num_vectors = K;
    scheme.genericity = Genericity::kAnyNofM;
    scheme.coherence_required = d + 1;
    scheme.claimed_dof = Rational(2, d + 1);
    for (int i = 0; i < K; ++i) {
        const int tx = gamma[static_cast<std::size_t>(i)] + 1;
        const int msg1 = rho[static_cast<std::size_t>(i)] + 1;
        const int msg2 = rho[static_cast<std::size_t>((i - d + 1 + K) % K)] + 1;
        scheme.transmissions.push_back({tx, msg1, 1, (i + 1) % K + 1});
        scheme.transmissions.push_back({tx, msg2, 2, (i + 2) % K + 1});
    }
    return scheme;
}

}  // namespace timcomp
