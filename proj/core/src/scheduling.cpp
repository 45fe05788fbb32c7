#include "timcomp/scheduling.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <set>

#include "timcomp/errors.hpp"
#include "timcomp/simplex.hpp"

namespace timcomp {

namespace {

constexpr int kHyperedgeMaxK = 16;
constexpr int kChromaticMaxK = 12;
constexpr int kBruteForceMaxK = 5;
constexpr int kBruteForceMaxN = 8;

using LinkSet = std::bitset<256>;  // enough for K <= 16 (K*K links)

/**
 * Covering LP: min sum(x) s.t. every receiver in 0..K-1 is covered by total
 * weight >= 1, columns given as receiver bitmasks. Returns the optimum and
 * the weights.
 */
LpSolution solve_covering(const std::vector<std::uint32_t>& columns, int K) {
    std::vector<std::vector<Rational>> A(
        static_cast<std::size_t>(K),
        std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (int r = 0; r < K; ++r) {
            if ((columns[c] >> r) & 1u) A[static_cast<std::size_t>(r)][c] = 1;
        }
    }
    const std::vector<Rational> b(static_cast<std::size_t>(K), Rational(1));
    const std::vector<Rational> c(columns.size(), Rational(1));
    LpSolution sol = solve_min_ge(A, b, c);
    if (!sol.feasible) {
        throw InvariantError("covering LP infeasible despite singleton edges");
    }
    return sol;
}

std::vector<std::pair<int, int>> hyperedge_witnesses(const Topology& topo,
                                                     std::uint32_t receivers) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < topo.K; ++k) {
        if (!((receivers >> k) & 1u)) continue;
        std::uint32_t others = 0;
        for (int j = 0; j < topo.K; ++j) {
            if (j != k && ((receivers >> j) & 1u)) {
                others |= topo.transmit[static_cast<std::size_t>(j)];
            }
        }
        const std::uint32_t free = topo.transmit[static_cast<std::size_t>(k)] & ~others;
        if (free == 0) {
            throw InvariantError("witness requested for infeasible hyperedge");
        }
        out.emplace_back(k, std::countr_zero(free));
    }
    return out;
}

}  // namespace

ConflictGraph build_conflict_graph(const Topology& topo) {
    ConflictGraph g;
    g.clusters.assign(static_cast<std::size_t>(topo.K), {});
    for (int j = 0; j < topo.K; ++j) {
        for (int i = 0; i < topo.K; ++i) {
            if (topo.connected(j, i)) {
                g.clusters[static_cast<std::size_t>(j)].push_back(
                    static_cast<int>(g.links.size()));
                g.links.push_back({i, j});
            }
        }
    }
    const std::size_t L = g.links.size();
    g.adjacent.assign(L, std::vector<char>(L, 0));
    for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = a + 1; b < L; ++b) {
            const auto& [i1, j1] = g.links[a];
            const auto& [i2, j2] = g.links[b];
            bool conflict;
            if (i1 == i2 || j1 == j2) {
                conflict = true;  // shared endpoint
            } else {
                // Distance 2 in the line graph: one link's transmitter is
                // heard by the other link's receiver.
                conflict = topo.connected(j2, i1) || topo.connected(j1, i2);
            }
            g.adjacent[a][b] = g.adjacent[b][a] = conflict ? 1 : 0;
        }
    }
    return g;
}

bool hyperedge_feasible(const Topology& topo, std::uint32_t receivers) {
    for (int k = 0; k < topo.K; ++k) {
        if (!((receivers >> k) & 1u)) continue;
        std::uint32_t others = 0;
        for (int j = 0; j < topo.K; ++j) {
            if (j != k && ((receivers >> j) & 1u)) {
                others |= topo.transmit[static_cast<std::size_t>(j)];
            }
        }
        if ((topo.transmit[static_cast<std::size_t>(k)] & ~others) == 0) return false;
    }
    return true;
}

std::vector<Hyperedge> enumerate_maximal_hyperedges(const Topology& topo) {
    if (topo.K > kHyperedgeMaxK) {
        throw GuardError("enumerate_maximal_hyperedges supports K <= " +
                         std::to_string(kHyperedgeMaxK) + ", got K=" +
                         std::to_string(topo.K));
    }
    const std::uint32_t full = topo.full_mask();
    std::vector<Hyperedge> out;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!hyperedge_feasible(topo, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < topo.K && maximal; ++v) {
            if (!((mask >> v) & 1u) && hyperedge_feasible(topo, mask | (1u << v))) {
                maximal = false;
            }
        }
        if (maximal) out.push_back({mask, hyperedge_witnesses(topo, mask)});
    }
    return out;
}

FractionalCover fractional_cover(const Topology& topo) {
    const std::vector<Hyperedge> edges = enumerate_maximal_hyperedges(topo);
    std::vector<std::uint32_t> columns;
    columns.reserve(edges.size());
    for (const Hyperedge& e : edges) columns.push_back(e.receivers);
    const LpSolution sol = solve_covering(columns, topo.K);

    FractionalCover cover;
    cover.value = sol.objective;
    for (std::size_t c = 0; c < edges.size(); ++c) {
        if (sol.x[c] > 0) cover.entries.emplace_back(edges[c], sol.x[c]);
    }
    return cover;
}

Rational selective_chromatic(const Topology& topo) {
    if (topo.K > kChromaticMaxK) {
        throw GuardError("selective_chromatic supports K <= " +
                         std::to_string(kChromaticMaxK) + ", got K=" +
                         std::to_string(topo.K));
    }
    const ConflictGraph g = build_conflict_graph(topo);
    const std::size_t L = g.links.size();
    std::vector<LinkSet> nonadj(L);  // complement adjacency (excluding self)
    for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = 0; b < L; ++b) {
            if (a != b && !g.adjacent[a][b]) nonadj[a].set(b);
        }
    }

    // Maximal independent sets of the conflict graph = maximal cliques of
    // its complement; Bron-Kerbosch with pivoting.
    std::set<std::uint32_t> cluster_sets;
    const auto cluster_mask = [&](const LinkSet& s) {
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < L; ++v) {
            if (s[v]) mask |= 1u << g.links[v].rx;
        }
        return mask;
    };
    const auto bk = [&](auto&& self, LinkSet r, LinkSet p, LinkSet x) -> void {
        if (p.none() && x.none()) {
            cluster_sets.insert(cluster_mask(r));
            return;
        }
        // Pivot: vertex of P|X with most complement-neighbours in P.
        std::size_t pivot = L;
        std::size_t best = 0;
        const LinkSet px = p | x;
        for (std::size_t v = 0; v < L; ++v) {
            if (!px[v]) continue;
            const std::size_t deg = (p & nonadj[v]).count();
            if (pivot == L || deg > best) {
                pivot = v;
                best = deg;
            }
        }
        const LinkSet cand = p & ~nonadj[pivot];
        for (std::size_t v = 0; v < L; ++v) {
            if (!cand[v]) continue;
            LinkSet rv = r;
            rv.set(v);
            self(self, rv, p & nonadj[v], x & nonadj[v]);
            p.reset(v);
            x.set(v);
        }
    };
    LinkSet all;
    for (std::size_t v = 0; v < L; ++v) all.set(v);
    bk(bk, LinkSet{}, all, LinkSet{});

    // Only inclusion-maximal cluster sets matter for the covering LP.
    std::vector<std::uint32_t> columns;
    for (std::uint32_t s : cluster_sets) {
        bool dominated = false;
        for (std::uint32_t o : cluster_sets) {
            if (o != s && (s & o) == s) {
                dominated = true;
                break;
            }
        }
        if (!dominated) columns.push_back(s);
    }
    return solve_covering(columns, topo.K).objective;
}

bool brute_force_t_fold_cover(const Topology& topo, int t, int n) {
    if (topo.K > kBruteForceMaxK || n > kBruteForceMaxN) {
        throw GuardError("brute_force_t_fold_cover supports K <= " +
                         std::to_string(kBruteForceMaxK) + " and n <= " +
                         std::to_string(kBruteForceMaxN));
    }
    if (t <= 0 || n <= 0) {
        throw GuardError("brute_force_t_fold_cover needs positive t and n");
    }
    const std::vector<Hyperedge> edges = enumerate_maximal_hyperedges(topo);

    // Exhaustive search over multisets of n edges, folded into a reachable-
    // state sweep over per-receiver delivery counts capped at t (the cap
    // loses nothing: deliveries beyond t are irrelevant).
    const int base = t + 1;
    const auto encode = [&](const std::vector<int>& counts) {
        std::uint32_t code = 0;
        for (int j = topo.K - 1; j >= 0; --j) {
            code = code * static_cast<std::uint32_t>(base) +
                   static_cast<std::uint32_t>(counts[static_cast<std::size_t>(j)]);
        }
        return code;
    };
    std::set<std::uint32_t> states = {0};
    for (int step = 0; step < n; ++step) {
        std::set<std::uint32_t> next;
        for (std::uint32_t code : states) {
            std::vector<int> counts(static_cast<std::size_t>(topo.K));
            std::uint32_t rem = code;
            for (int j = 0; j < topo.K; ++j) {
                counts[static_cast<std::size_t>(j)] =
                    static_cast<int>(rem % static_cast<std::uint32_t>(base));
                rem /= static_cast<std::uint32_t>(base);
            }
            for (const Hyperedge& e : edges) {
                std::vector<int> c2 = counts;
                for (int j = 0; j < topo.K; ++j) {
                    if ((e.receivers >> j) & 1u) {
                        c2[static_cast<std::size_t>(j)] =
                            std::min(t, c2[static_cast<std::size_t>(j)] + 1);
                    }
                }
                next.insert(encode(c2));
            }
        }
        states = std::move(next);
    }
    std::vector<int> goal(static_cast<std::size_t>(topo.K), t);
    return states.count(encode(goal)) > 0;
}

}  // namespace timcomp
