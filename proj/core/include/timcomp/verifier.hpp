#ifndef TIMCOMP_VERIFIER_HPP
#define TIMCOMP_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "timcomp/scheme.hpp"
#include "timcomp/topology.hpp"

namespace timcomp {

/**
 * Outcome of successive-cancellation decoding at one receiver: which
 * instances of its own message were recovered and how many cancellation
 * passes it took.
 */
struct ReceiverDecode {
    std::vector<std::pair<int, int>> recovered;  // (message, instance), 1-based
    int rounds = 1;
    bool ok = false;
};

struct DecodeResult {
    std::vector<ReceiverDecode> receivers;
    bool ok = false;
};

std::string decode_result_to_json(const DecodeResult& result);

/**
 * Symbolic decodability check. At each receiver, per pass: an instance is
 * decodable iff some visible transmission of it sits alone on its vector
 * index and at most n distinct vector indices are visible (so generic
 * vectors are independent); decoded instances are reconstructed and all of
 * their transmissions cancelled, then the pass repeats. ok iff every
 * receiver recovers exactly n * claimed_dof instances of its own message.
 * Throws Error on duplicate (transmitter, vector) pairs.
 */
DecodeResult check_combinatorial(const Topology& topo,
                                 const SchemeDescriptor& scheme);

/**
 * Independent numeric check: seeded random nonzero integer channels (one
 * draw per coherence block) and seeded generic precoding vectors; decoding
 * succeeds when the instance's effective received column falls outside the
 * exact rational span of every other visible column at its cancellation
 * round. True iff all trials pass.
 */
bool check_numeric(const Topology& topo, const SchemeDescriptor& scheme,
                   std::uint64_t seed, int trials);

/**
 * Full verdict: combinatorial decodability, numeric check (seed 7, 32
 * trials by default), and the instance count of every message equal to
 * n * claimed_dof. An empty scheme claiming 0 passes vacuously.
 */
bool verify_claim(const Topology& topo, const SchemeDescriptor& scheme,
                  std::uint64_t seed = 7, int trials = 32);

}  // namespace timcomp

#endif  // TIMCOMP_VERIFIER_HPP
