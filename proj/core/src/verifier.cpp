#include "timcomp/verifier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "timcomp/errors.hpp"

namespace timcomp {

namespace {

using BigInt = boost::multiprecision::cpp_int;

/// Fraction-free big-integer row echelon for exact span membership.
class BigEchelon {
public:
    bool reduce(std::vector<BigInt>& v) const {
        for (const auto& row : rows_) {
            const std::size_t p = pivot_of(row);
            if (v[p] == 0) continue;
            const BigInt a = row[p];
            const BigInt b = v[p];
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i] = v[i] * a - row[i] * b;
            }
        }
        return std::all_of(v.begin(), v.end(),
                           [](const BigInt& x) { return x == 0; });
    }

    void insert(std::vector<BigInt> v) {
        if (!reduce(v)) rows_.push_back(std::move(v));
    }

    std::size_t rank() const { return rows_.size(); }

private:
    static std::size_t pivot_of(const std::vector<BigInt>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] != 0) return i;
        }
        return row.size();
    }

    std::vector<std::vector<BigInt>> rows_;
};

void validate_scheme(const Topology& topo, const SchemeDescriptor& scheme) {
    std::set<std::pair<int, int>> slots;
    for (const Transmission& t : scheme.transmissions) {
        if (t.tx < 1 || t.tx > topo.K || t.msg < 1 || t.msg > topo.K) {
            throw Error("scheme references transmitter/message outside 1.." +
                        std::to_string(topo.K));
        }
        if (t.vec < 1 || t.vec > scheme.num_vectors || t.instance < 1) {
            throw Error("scheme transmission has out-of-range vector/instance");
        }
        if (!slots.insert({t.tx, t.vec}).second) {
            throw Error("scheme reuses (transmitter " + std::to_string(t.tx) +
                        ", vector " + std::to_string(t.vec) + ")");
        }
    }
    if (scheme.n < 1) throw Error("scheme extension length must be positive");
}

bool all_subsets_independent(const std::vector<std::vector<long long>>& vecs,
                             int n) {
    const int M = static_cast<int>(vecs.size());
    const int take = std::min(M, n);
    std::vector<int> idx(static_cast<std::size_t>(take));
    // Iterate all `take`-subsets of the M vectors and rank-test each.
    const auto check = [&](auto&& self, int pos, int start) -> bool {
        if (pos == take) {
            BigEchelon ech;
            for (int i : idx) {
                ech.insert(std::vector<BigInt>(vecs[static_cast<std::size_t>(i)].begin(),
                                               vecs[static_cast<std::size_t>(i)].end()));
            }
            return ech.rank() == static_cast<std::size_t>(take);
        }
        for (int i = start; i < M; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            if (!self(self, pos + 1, i + 1)) return false;
        }
        return true;
    };
    return check(check, 0, 0);
}

std::vector<std::vector<long long>> draw_vectors(const SchemeDescriptor& scheme,
                                                 std::mt19937_64& rng) {
    const int n = scheme.n;
    const int M = scheme.num_vectors;
    std::vector<std::vector<long long>> vecs(
        static_cast<std::size_t>(M),
        std::vector<long long>(static_cast<std::size_t>(n), 0));
    if (scheme.genericity == Genericity::kStandardBasis) {
        if (M > n) {
            throw Error("standard-basis scheme needs at most n vectors");
        }
        for (int v = 0; v < M; ++v) {
            vecs[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 1;
        }
        return vecs;
    }
    if (M <= 12) {
        // Rejection sampling: small random integer vectors, every n of them
        // (or all, if M < n) independent.
        std::uniform_int_distribution<int> entry(-9, 9);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            for (auto& v : vecs) {
                for (auto& x : v) x = entry(rng);
            }
            if (all_subsets_independent(vecs, n)) return vecs;
        }
        throw Error("failed to sample generic precoding vectors");
    }
    // Vandermonde columns on distinct nodes: any n of them are independent.
    std::uniform_int_distribution<int> node_dist(-1000, 1000);
    std::set<int> used;
    for (int v = 0; v < M; ++v) {
        int node = node_dist(rng);
        while (!used.insert(node).second) node = node_dist(rng);
        long long p = 1;
        for (int s = 0; s < n; ++s) {
            vecs[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] = p;
            p *= node;
        }
    }
    return vecs;
}

}  // namespace

DecodeResult check_combinatorial(const Topology& topo,
                                 const SchemeDescriptor& scheme) {
    validate_scheme(topo, scheme);
    DecodeResult result;
    result.ok = true;
    const Rational expected =
        Rational(scheme.n) * scheme.claimed_dof;  // instances per message
    for (int j = 0; j < topo.K; ++j) {
        ReceiverDecode rd;
        // Live transmissions currently visible (and uncancelled) at j.
        std::vector<Transmission> live;
        for (const Transmission& t : scheme.transmissions) {
            if (topo.connected(j, t.tx - 1)) live.push_back(t);
        }
        int productive = 0;
        while (!live.empty()) {
            std::map<int, int> vec_uses;
            for (const Transmission& t : live) ++vec_uses[t.vec];
            if (static_cast<int>(vec_uses.size()) > scheme.n) break;
            // An instance can be reconstructed when one of its transmissions
            // occupies a vector no other live transmission touches.
            std::set<std::pair<int, int>> decoded;
            for (const Transmission& t : live) {
                if (vec_uses[t.vec] == 1) decoded.insert({t.msg, t.instance});
            }
            if (decoded.empty()) break;
            ++productive;
            for (const auto& inst : decoded) {
                if (inst.first == j + 1) rd.recovered.push_back(inst);
            }
            std::erase_if(live, [&](const Transmission& t) {
                return decoded.count({t.msg, t.instance}) > 0;
            });
        }
        std::sort(rd.recovered.begin(), rd.recovered.end());
        rd.rounds = std::max(1, productive);
        rd.ok = Rational(rd.recovered.size()) == expected;
        result.ok = result.ok && rd.ok;
        result.receivers.push_back(std::move(rd));
    }
    return result;
}

bool check_numeric(const Topology& topo, const SchemeDescriptor& scheme,
                   std::uint64_t seed, int trials) {
    validate_scheme(topo, scheme);
    if (trials <= 0) throw Error("check_numeric needs at least one trial");
    std::mt19937_64 rng(seed);
    const int n = scheme.n;
    const int coherence = std::max(1, scheme.coherence_required);
    const int blocks = (n + coherence - 1) / coherence;
    std::uniform_int_distribution<int> gain(-100, 100);

    for (int trial = 0; trial < trials; ++trial) {
        const auto vecs = draw_vectors(scheme, rng);
        // One nonzero gain per connected link per coherence block.
        std::vector<std::vector<std::vector<long long>>> h(
            static_cast<std::size_t>(topo.K),
            std::vector<std::vector<long long>>(
                static_cast<std::size_t>(topo.K),
                std::vector<long long>(static_cast<std::size_t>(blocks), 0)));
        for (int j = 0; j < topo.K; ++j) {
            for (int i = 0; i < topo.K; ++i) {
                if (!topo.connected(j, i)) continue;
                for (int b = 0; b < blocks; ++b) {
                    int g = 0;
                    while (g == 0) g = gain(rng);
                    h[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(b)] = g;
                }
            }
        }

        for (int j = 0; j < topo.K; ++j) {
            // Effective received column of every visible instance at j.
            std::map<std::pair<int, int>, std::vector<BigInt>> columns;
            for (const Transmission& t : scheme.transmissions) {
                if (!topo.connected(j, t.tx - 1)) continue;
                auto& col = columns
                                .try_emplace({t.msg, t.instance},
                                             std::vector<BigInt>(
                                                 static_cast<std::size_t>(n), 0))
                                .first->second;
                for (int s = 0; s < n; ++s) {
                    col[static_cast<std::size_t>(s)] +=
                        BigInt(h[static_cast<std::size_t>(j)]
                                [static_cast<std::size_t>(t.tx - 1)]
                                [static_cast<std::size_t>(s / coherence)]) *
                        vecs[static_cast<std::size_t>(t.vec - 1)]
                            [static_cast<std::size_t>(s)];
                }
            }
            std::map<std::pair<int, int>, std::vector<BigInt>> live = columns;
            bool progress = true;
            while (progress && !live.empty()) {
                progress = false;
                std::vector<std::pair<int, int>> decoded;
                for (const auto& [key, col] : live) {
                    BigEchelon others;
                    for (const auto& [k2, c2] : live) {
                        if (k2 != key) others.insert(c2);
                    }
                    std::vector<BigInt> probe = col;
                    if (!others.reduce(probe)) decoded.push_back(key);
                }
                for (const auto& key : decoded) {
                    live.erase(key);
                    progress = true;
                }
            }
            // Every instance of this receiver's own message must have been
            // separated out.
            for (const auto& [key, col] : live) {
                if (key.first == j + 1) return false;
            }
            for (const Transmission& t : scheme.transmissions) {
                if (t.msg == j + 1 && columns.count({t.msg, t.instance}) == 0) {
                    return false;  // desired instance never reaches receiver
                }
            }
        }
    }
    return true;
}

bool verify_claim(const Topology& topo, const SchemeDescriptor& scheme,
                  std::uint64_t seed, int trials) {
    const DecodeResult combinatorial = check_combinatorial(topo, scheme);
    if (!combinatorial.ok) return false;
    // Per-message instance counts must equal n * claimed_dof exactly.
    const Rational expected = Rational(scheme.n) * scheme.claimed_dof;
    for (int k = 1; k <= topo.K; ++k) {
        std::set<int> instances;
        for (const Transmission& t : scheme.transmissions) {
            if (t.msg == k) instances.insert(t.instance);
        }
        if (Rational(instances.size()) != expected) return false;
    }
    return check_numeric(topo, scheme, seed, trials);
}

std::string decode_result_to_json(const DecodeResult& result) {
    nlohmann::json doc;
    doc["ok"] = result.ok;
    doc["receivers"] = nlohmann::json::array();
    for (std::size_t j = 0; j < result.receivers.size(); ++j) {
        const ReceiverDecode& rd = result.receivers[j];
        nlohmann::json entry;
        entry["receiver"] = j + 1;
        entry["rounds"] = rd.rounds;
        entry["ok"] = rd.ok;
        entry["recovered"] = nlohmann::json::array();
        for (const auto& [msg, inst] : rd.recovered) {
            entry["recovered"].push_back({{"msg", msg}, {"instance", inst}});
        }
        doc["receivers"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace timcomp
