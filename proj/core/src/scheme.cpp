#include "timcomp/scheme.hpp"

#include <json.hpp>

#include "timcomp/errors.hpp"

namespace timcomp {

std::string scheme_to_json(const SchemeDescriptor& scheme) {
    nlohmann::json doc;
    doc["n"] = scheme.n;
    doc["coherence"] = scheme.coherence_required;
    doc["claimed_dof"] = to_fraction(scheme.claimed_dof);
    doc["vectors"] = scheme.num_vectors;
    doc["genericity"] = scheme.genericity == Genericity::kStandardBasis
                            ? "standard_basis"
                            : "any_n_of_m";
    doc["transmissions"] = nlohmann::json::array();
    for (const Transmission& t : scheme.transmissions) {
        doc["transmissions"].push_back(
            {{"tx", t.tx}, {"msg", t.msg}, {"instance", t.instance}, {"vec", t.vec}});
    }
    return doc.dump(2) + "\n";
}

SchemeDescriptor scheme_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("scheme JSON parse failure: ") + e.what());
    }
    SchemeDescriptor scheme;
    try {
        scheme.n = doc.at("n").get<int>();
        scheme.coherence_required = doc.value("coherence", 1);
        scheme.claimed_dof = parse_fraction(doc.at("claimed_dof").get<std::string>());
        const std::string mode = doc.value("genericity", "any_n_of_m");
        if (mode == "standard_basis") {
            scheme.genericity = Genericity::kStandardBasis;
        } else if (mode == "any_n_of_m") {
            scheme.genericity = Genericity::kAnyNofM;
        } else {
            throw Error("scheme JSON: unknown genericity '" + mode + "'");
        }
        for (const auto& item : doc.at("transmissions")) {
            scheme.transmissions.push_back({item.at("tx").get<int>(),
                                            item.at("msg").get<int>(),
                                            item.at("instance").get<int>(),
                                            item.at("vec").get<int>()});
        }
        int max_vec = 0;
        for (const Transmission& t : scheme.transmissions) {
            max_vec = std::max(max_vec, t.vec);
        }
        scheme.num_vectors = doc.value("vectors", max_vec);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("scheme JSON field error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(std::string("scheme JSON field error: ") + e.what());
    }
    return scheme;
}

}  // namespace timcomp
