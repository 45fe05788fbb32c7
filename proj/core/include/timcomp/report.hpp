#ifndef TIMCOMP_REPORT_HPP
#define TIMCOMP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "timcomp/bounds.hpp"
#include "timcomp/topology.hpp"

namespace timcomp {

inline constexpr const char* kToolVersion = "1.0.0";

/// 64-bit FNV-1a hash of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/**
 * Serializable analysis report: topology echo, one entry per method with an
 * exact-fraction value and its certificate, and the summary. Values are
 * always "p/q" strings so they survive JSON round trips losslessly.
 */
struct ReportDocument {
    struct Entry {
        std::string method;
        std::string status;            // "computed" or "skipped"
        std::string value;             // "p/q", empty when not applicable
        std::string certificate_json;  // serialized object, may be empty

        bool operator==(const Entry&) const = default;
    };

    std::string version;
    std::string input_hash;  // FNV-1a of the rendered topology
    int K = 0;
    std::vector<std::string> rows;  // '0'/'1' strings, row j = receiver j
    std::vector<Entry> entries;     // achievable methods first, then outer
    std::string best_achievable;    // empty when every achievable was skipped
    std::string best_outer;
    bool tight = false;

    bool operator==(const ReportDocument&) const = default;
};

/// Assembles the document for a finished analysis.
ReportDocument build_report(const Topology& topo, const BoundReport& bounds);

/// JSON emit/parse; parse(emit(doc)) == doc. Throws Error on bad input.
std::string report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const std::string& text);

/// Human-readable fixed-width table.
std::string render_report_table(const ReportDocument& doc);

}  // namespace timcomp

#endif  // TIMCOMP_REPORT_HPP
