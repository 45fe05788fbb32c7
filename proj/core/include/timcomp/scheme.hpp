#ifndef TIMCOMP_SCHEME_HPP
#define TIMCOMP_SCHEME_HPP

#include <string>
#include <vector>

#include "timcomp/rational.hpp"

namespace timcomp {

/**
 * One precoded transmission: transmitter `tx` sends instance `instance` of
 * message `msg` along precoding vector `vec`. All fields are 1-based, the
 * same numbering the text formats use.
 */
struct Transmission {
    int tx = 0;
    int msg = 0;
    int instance = 0;
    int vec = 0;

    bool operator==(const Transmission&) const = default;
};

/// How the precoding vectors V_1..V_M are to be instantiated.
enum class Genericity {
    kAnyNofM,        // any n of the M vectors are linearly independent
    kStandardBasis,  // V_v = e_v (requires M == n)
};

/**
 * A transmission scheme over an n-dimensional symbol extension using M
 * precoding vectors. The claimed symmetric DoF is
 * (instances per message) / n.
 */
struct SchemeDescriptor {
    int n = 0;                   // extension length
    int num_vectors = 0;         // M (may exceed n in generic mode)
    Genericity genericity = Genericity::kAnyNofM;
    int coherence_required = 1;  // minimum channel coherence time (slots)
    Rational claimed_dof;
    std::vector<Transmission> transmissions;

    bool operator==(const SchemeDescriptor&) const = default;
};

/// JSON layout: {n, coherence, claimed_dof: "p/q", vectors, genericity,
/// transmissions: [{tx, msg, instance, vec}]}.
std::string scheme_to_json(const SchemeDescriptor& scheme);
SchemeDescriptor scheme_from_json(const std::string& text);

}  // namespace timcomp

#endif  // TIMCOMP_SCHEME_HPP
