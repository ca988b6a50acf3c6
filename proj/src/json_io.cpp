#include "zkmorse/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace zkmorse {

nlohmann::json complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["m"] = k.ground_set_size();
    auto facets = nlohmann::json::array();
    if (!k.is_void())
        for (FaceSet f : k.facets()) facets.push_back(f.vertices());
    j["facets"] = facets;
    if (k.is_void()) j["void"] = true;
    return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("complex: expected a JSON object");
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw std::invalid_argument("complex: missing integer field \"m\"");
    const int m = j["m"].get<int>();
    if (m <= 0 || m > kMaxGroundSet)
        throw std::invalid_argument("complex: \"m\" must be in [1,24]");
    const bool make_void = j.value("void", false);
    if (!j.contains("facets") || !j["facets"].is_array())
        throw std::invalid_argument("complex: missing array field \"facets\"");
    std::vector<FaceSet> facets;
    for (const auto& fl : j["facets"]) {
        if (!fl.is_array()) throw std::invalid_argument("complex: facet must be a list");
        FaceSet f;
        for (const auto& v : fl) {
            if (!v.is_number_integer())
                throw std::invalid_argument("complex: facet entries must be integers");
            const int vi = v.get<int>();
            if (vi < 1 || vi > m)
                throw std::invalid_argument("complex: vertex out of range");
            f.insert(vi);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(m, std::move(facets), make_void);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return complex_from_json(j);
}

void save_complex_file(const SimplicialComplex& k, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << complex_to_json(k).dump(2) << "\n";
}

} // namespace zkmorse
