#include "timcomp/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "timcomp/errors.hpp"

namespace timcomp {

namespace {

using nlohmann::json;

std::vector<int> mask_to_list(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
        if ((mask >> i) & 1u) out.push_back(i + 1);
    }
    return out;
}

json matrix_to_json(const NonConflictMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.a) {
        std::string s;
        for (std::uint8_t x : row) s.push_back(x ? '1' : '0');
        rows.push_back(s);
    }
    return {{"rows", rows}, {"q", m.q}};
}

std::string certificate_for(const std::string& method,
                            const BoundReport& bounds) {
    json cert;
    if (method == "covering" && bounds.cover_certificate) {
        cert["value"] = to_fraction(bounds.cover_certificate->value);
        cert["entries"] = json::array();
        for (const auto& [edge, weight] : bounds.cover_certificate->entries) {
            json witnesses = json::array();
            for (const auto& [rx, tx] : edge.witnesses) {
                witnesses.push_back({{"receiver", rx + 1}, {"transmitter", tx + 1}});
            }
            cert["entries"].push_back({{"receivers", mask_to_list(edge.receivers)},
                                       {"witnesses", witnesses},
                                       {"weight", to_fraction(weight)}});
        }
    } else if (method == "hamiltonian" && bounds.hamiltonian_certificate) {
        const auto& h = *bounds.hamiltonian_certificate;
        std::vector<int> cycle;
        for (int v : h.cycle) cycle.push_back(v + 1);
        cert = {{"cycle", cycle},
                {"matrix", matrix_to_json(h.matrix)},
                {"q", h.matrix.q},
                {"coherence", h.coherence_required}};
    } else if (method == "partition" && bounds.partition_certificate) {
        const auto& p = *bounds.partition_certificate;
        json portions = json::array();
        for (const auto& portion : p.portions) {
            std::vector<int> members;
            for (int v : portion) members.push_back(v + 1);
            portions.push_back(members);
        }
        cert = {{"portions", portions},
                {"matrix", matrix_to_json(p.matrix)},
                {"q", p.q},
                {"coherence", p.coherence_required}};
    } else if (method == "generator" && bounds.generator_certificate) {
        const auto& g = *bounds.generator_certificate;
        std::vector<int> sequence;
        for (int v : g.sequence) sequence.push_back(v + 1);
        json signs = json::object();
        for (const auto& [recv, pattern] : g.sign_patterns) {
            signs[std::to_string(recv + 1)] = pattern;
        }
        cert = {{"S", mask_to_list(g.S)},
                {"I0", mask_to_list(g.I0)},
                {"sequence", sequence},
                {"signs", signs},
                {"bound", to_fraction(g.bound)}};
    } else if (method == "compound" && bounds.compound_certificate) {
        const auto& c = *bounds.compound_certificate;
        cert = {{"S", mask_to_list(c.S)},
                {"S_prime", mask_to_list(c.S_prime)},
                {"bound", to_fraction(c.bound)}};
    } else if (method == "tdma" && bounds.computed.count("tdma")) {
        cert = {{"optimal", bounds.tdma_is_optimal}};
    }
    return cert.is_null() ? std::string() : cert.dump();
}

const std::optional<Rational>& value_for(const std::string& method,
                                         const BoundReport& b) {
    if (method == "coloring") return b.coloring;
    if (method == "covering") return b.covering;
    if (method == "hamiltonian") return b.hamiltonian;
    if (method == "matching") return b.matching;
    if (method == "partition") return b.partition;
    if (method == "regular") return b.regular;
    if (method == "generator") return b.generator;
    if (method == "compound") return b.compound;
    return b.tdma;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

ReportDocument build_report(const Topology& topo, const BoundReport& bounds) {
    ReportDocument doc;
    doc.version = kToolVersion;
    const std::string rendered = render_topology(topo);
    doc.input_hash = fnv1a_hex(rendered);
    doc.K = topo.K;
    {
        std::istringstream in(rendered);
        std::string line;
        std::getline(in, line);  // the leading K line
        while (std::getline(in, line)) {
            if (!line.empty()) doc.rows.push_back(line);
        }
    }
    std::vector<std::string> order = kAchievableMethods;
    order.insert(order.end(), kOuterMethods.begin(), kOuterMethods.end());
    for (const std::string& method : order) {
        ReportDocument::Entry entry;
        entry.method = method;
        entry.status = bounds.computed.count(method) ? "computed" : "skipped";
        const auto& value = value_for(method, bounds);
        if (value) entry.value = to_fraction(*value);
        entry.certificate_json = certificate_for(method, bounds);
        doc.entries.push_back(std::move(entry));
    }
    if (bounds.best_achievable) {
        doc.best_achievable = to_fraction(*bounds.best_achievable);
    }
    doc.best_outer = to_fraction(bounds.best_outer);
    doc.tight = bounds.tight;
    return doc;
}

std::string report_to_json(const ReportDocument& doc) {
    json out;
    out["version"] = doc.version;
    out["input_hash"] = doc.input_hash;
    out["topology"] = {{"K", doc.K}, {"rows", doc.rows}};
    out["methods"] = json::array();
    for (const auto& entry : doc.entries) {
        json e = {{"method", entry.method}, {"status", entry.status}};
        if (!entry.value.empty()) e["value"] = entry.value;
        if (!entry.certificate_json.empty()) {
            e["certificate"] = json::parse(entry.certificate_json);
        }
        out["methods"].push_back(std::move(e));
    }
    json summary;
    if (!doc.best_achievable.empty()) {
        summary["best_achievable"] = doc.best_achievable;
    }
    summary["best_outer"] = doc.best_outer;
    summary["tight"] = doc.tight;
    out["summary"] = std::move(summary);
    return out.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("report JSON parse failure: ") + e.what());
    }
    ReportDocument doc;
    try {
        doc.version = in.at("version").get<std::string>();
        doc.input_hash = in.at("input_hash").get<std::string>();
        doc.K = in.at("topology").at("K").get<int>();
        doc.rows = in.at("topology").at("rows").get<std::vector<std::string>>();
        for (const auto& e : in.at("methods")) {
            ReportDocument::Entry entry;
            entry.method = e.at("method").get<std::string>();
            entry.status = e.at("status").get<std::string>();
            entry.value = e.value("value", std::string());
            if (e.contains("certificate")) {
                entry.certificate_json = e.at("certificate").dump();
            }
            doc.entries.push_back(std::move(entry));
        }
        const auto& summary = in.at("summary");
        doc.best_achievable = summary.value("best_achievable", std::string());
        doc.best_outer = summary.at("best_outer").get<std::string>();
        doc.tight = summary.at("tight").get<bool>();
    } catch (const json::exception& e) {
        throw Error(std::string("report JSON field error: ") + e.what());
    }
    return doc;
}

std::string render_report_table(const ReportDocument& doc) {
    std::ostringstream out;
    out << "K = " << doc.K << "   hash = " << doc.input_hash << "   version "
        << doc.version << "\n";
    for (const auto& row : doc.rows) out << "    " << row << "\n";
    out << "\n";
    std::size_t method_w = 8;
    for (const auto& e : doc.entries) method_w = std::max(method_w, e.method.size());
    out << std::left << std::setw(static_cast<int>(method_w) + 2) << "method"
        << std::setw(10) << "status" << "value\n";
    for (const auto& e : doc.entries) {
        out << std::left << std::setw(static_cast<int>(method_w) + 2) << e.method
            << std::setw(10) << e.status << (e.value.empty() ? "-" : e.value)
            << "\n";
    }
    out << "\n";
    out << "best achievable: "
        << (doc.best_achievable.empty() ? "-" : doc.best_achievable) << "\n";
    out << "best outer:      " << doc.best_outer << "\n";
    out << "tight:           " << (doc.tight ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace timcomp
