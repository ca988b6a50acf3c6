#pragma once

#include <cstdint>
#include <functional>

#include "zkmorse/simplicial_complex.hpp"

namespace zkmorse {

/// The (k-1)-skeleton of the (m-1)-simplex: facets are all k-subsets of [m].
SimplicialComplex skeleton_complex(int m, int k);

/// The clique complex of a graph.
SimplicialComplex flag_of_graph(const Graph& g);

/// A random complex with a few random facets (deterministic per seed).
SimplicialComplex random_complex(int m, std::uint64_t seed);

/// A random shifted complex (deterministic per seed).
SimplicialComplex shifted_random(int m, std::uint64_t seed);

/// Visit every simplicial complex on ground set [m] (facet-set identity),
/// optionally restricted to those containing every singleton. The void
/// complex is visited only when `all_singletons` is false.
void enumerate_complexes(int m, bool all_singletons,
                         const std::function<void(const SimplicialComplex&)>& visit);

/// Visit every labelled graph on [m].
void enumerate_graphs(int m, const std::function<void(const Graph&)>& visit);

} // namespace zkmorse
