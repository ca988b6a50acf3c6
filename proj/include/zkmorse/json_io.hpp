#pragma once

#include <string>

#include <json.hpp>

#include "zkmorse/simplicial_complex.hpp"

namespace zkmorse {

/// Complex file format: {"m": <int>, "facets": [[<ints >=1>]], "void": <bool>}.
/// Facet lists are 1-based, ascending.
nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

SimplicialComplex load_complex_file(const std::string& path);
void save_complex_file(const SimplicialComplex& k, const std::string& path);

} // namespace zkmorse
