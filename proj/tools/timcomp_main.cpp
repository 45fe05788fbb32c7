// Command-line front end: analyze topology files, run built-in demos,
// enumerate small networks, and verify transmission schemes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "timcomp/bounds.hpp"
#include "timcomp/errors.hpp"
#include "timcomp/fixtures.hpp"
#include "timcomp/report.hpp"
#include "timcomp/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitAllSkipped = 3;
constexpr int kExitInvariant = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw timcomp::Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

timcomp::AnalyzeOptions options_from(const std::vector<std::string>& methods,
                                     int max_k_override) {
    timcomp::AnalyzeOptions options;
    options.max_k_override = max_k_override;
    std::vector<std::string> known = timcomp::kAchievableMethods;
    known.insert(known.end(), timcomp::kOuterMethods.begin(),
                 timcomp::kOuterMethods.end());
    for (const std::string& m : methods) {
        if (std::find(known.begin(), known.end(), m) == known.end()) {
            throw timcomp::Error("unknown method '" + m + "'");
        }
        options.methods.insert(m);
    }
    return options;
}

int emit_analysis(const timcomp::Topology& topo,
                  const timcomp::AnalyzeOptions& options, bool as_json) {
    const timcomp::BoundReport bounds = timcomp::analyze(topo, options);
    if (bounds.computed.empty()) {
        std::cerr << "error: every requested method was skipped by its size guard\n";
        return kExitAllSkipped;
    }
    const timcomp::ReportDocument doc = timcomp::build_report(topo, bounds);
    if (as_json) {
        std::cout << timcomp::report_to_json(doc);
    } else {
        std::cout << timcomp::render_report_table(doc);
    }
    return kExitOk;
}

int run_verify(const timcomp::Topology& topo,
               const timcomp::SchemeDescriptor& scheme, std::uint64_t seed,
               int trials) {
    const timcomp::DecodeResult decode = timcomp::check_combinatorial(topo, scheme);
    std::cout << timcomp::decode_result_to_json(decode);
    const bool numeric = timcomp::check_numeric(topo, scheme, seed, trials);
    const bool verdict = timcomp::verify_claim(topo, scheme, seed, trials);
    std::cout << "combinatorial: " << (decode.ok ? "ok" : "failed") << "\n"
              << "numeric (" << trials << " trials, seed " << seed
              << "): " << (numeric ? "ok" : "failed") << "\n"
              << "claim " << timcomp::to_fraction(scheme.claimed_dof) << ": "
              << (verdict ? "verified" : "rejected") << "\n";
    if (verdict && scheme.transmissions.empty()) {
        std::cout << "warning: empty scheme verified vacuously\n";
    }
    return verdict ? kExitOk : kExitVerdictFalse;
}

int run_demo(const std::string& name, bool as_json) {
    const auto fixture = timcomp::find_fixture(name);
    if (!fixture) {
        std::cerr << "error: unknown demo '" << name << "'\n";
        return kExitInput;
    }
    const int rc = emit_analysis(fixture->topo, {}, as_json);
    if (rc != kExitOk) return rc;
    if (fixture->scheme) {
        std::cout << "\nscheme verification (" << name << "):\n";
        return run_verify(fixture->topo, *fixture->scheme, 7, 32);
    }
    return kExitOk;
}

int run_enumerate(int K, bool check_orthogonal, bool as_json) {
    if (K < 1 || K > 5) {
        std::cerr << "error: enumeration supports K <= 5\n";
        return kExitAllSkipped;
    }
    const auto topologies = timcomp::enumerate_topologies(K);
    if (K == 5) {
        // Full analysis is out of reach here; list the canonical classes.
        for (const auto& topo : topologies) {
            std::cout << timcomp::canonical_key(topo) << "\n";
        }
        std::cout << topologies.size() << " non-isomorphic topologies\n";
        return kExitOk;
    }
    int violations = 0;
    for (const auto& topo : topologies) {
        const timcomp::BoundReport bounds = timcomp::analyze(topo, {});
        const timcomp::ReportDocument doc = timcomp::build_report(topo, bounds);
        if (as_json) {
            std::cout << timcomp::report_to_json(doc);
        } else {
            std::cout << timcomp::render_report_table(doc) << "\n";
        }
        if (check_orthogonal &&
            (!bounds.coloring || *bounds.coloring != bounds.best_outer)) {
            ++violations;
            std::cout << "orthogonal-access violation: coloring "
                      << (bounds.coloring ? timcomp::to_fraction(*bounds.coloring)
                                          : std::string("-"))
                      << " vs outer " << timcomp::to_fraction(bounds.best_outer)
                      << "\n";
        }
    }
    if (check_orthogonal) {
        std::cout << (violations == 0
                          ? "orthogonal access optimal for every topology\n"
                          : "violations: " + std::to_string(violations) + "\n");
        if (violations > 0) return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified symmetric-DoF bounds for partially connected "
                 "interference networks with transmitter cooperation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", timcomp::kToolVersion);

    std::string topo_path, demo_name, scheme_path;
    std::vector<std::string> methods;
    int max_k_override = 0;
    int enum_k = 0;
    bool as_json = false, check_orthogonal = false;
    std::uint64_t seed = 7;
    int trials = 32;

    auto* analyze = app.add_subcommand("analyze", "Analyze a topology file");
    analyze->add_option("file", topo_path, "topology file")->required();
    analyze->add_option("--methods", methods, "subset of methods to run")
        ->delimiter(',');
    analyze->add_flag("--json", as_json, "emit JSON instead of a table");
    analyze->add_option("--max-K-override", max_k_override,
                        "replace the per-method size guards");

    auto* demo = app.add_subcommand("demo", "Run a built-in example");
    demo->add_option("name", demo_name,
                     "fig5, reg53, wyner:K, triangular:K, ex7, ex9, "
                     "ex4-repetition")
        ->required();
    demo->add_flag("--json", as_json, "emit JSON instead of a table");

    auto* enumerate = app.add_subcommand("enumerate",
                                         "Analyze all non-isomorphic K-cell "
                                         "topologies (K <= 4; K = 5 lists only)");
    enumerate->add_option("K", enum_k, "number of cells")->required();
    enumerate->add_flag("--check-orthogonal-optimal", check_orthogonal,
                        "assert coloring matches the best outer bound");
    enumerate->add_flag("--json", as_json, "emit JSON instead of tables");

    auto* verify = app.add_subcommand("verify", "Verify a scheme against a topology");
    verify->add_option("topology", topo_path, "topology file")->required();
    verify->add_option("scheme", scheme_path, "scheme JSON file")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "number of numeric trials");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const timcomp::Topology topo =
                timcomp::parse_topology(read_file(topo_path));
            return emit_analysis(topo, options_from(methods, max_k_override),
                                 as_json);
        }
        if (demo->parsed()) return run_demo(demo_name, as_json);
        if (enumerate->parsed()) {
            return run_enumerate(enum_k, check_orthogonal, as_json);
        }
        const timcomp::Topology topo =
            timcomp::parse_topology(read_file(topo_path));
        const timcomp::SchemeDescriptor scheme =
            timcomp::scheme_from_json(read_file(scheme_path));
        return run_verify(topo, scheme, seed, trials);
    } catch (const timcomp::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const timcomp::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAllSkipped;
    } catch (const timcomp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
