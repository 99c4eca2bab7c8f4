#pragma once

#include <cstdint>
#include <optional>

#include "octbic/decomposition.hpp"
#include "octbic/graph.hpp"

namespace octbic {

/// Greedy bipartization. Repeatedly 2-colors G - O by BFS and moves the
/// vertex incident to the most monochromatic edges into O (ties: smaller
/// id) until the coloring is proper. `rng_seed` permutes the order of BFS
/// roots; seed 0 uses ascending ids. Always returns a valid decomposition.
OctDecomposition greedy_oct(const Graph& g, std::uint64_t rng_seed = 0);

/// Smallest O with |O| <= k_max whose removal leaves a bipartite graph, by
/// exhaustive subset search in order of size. nullopt if none exists.
std::optional<OctDecomposition> min_oct_exhaustive(const Graph& g, std::size_t k_max);

/// L/R from a BFS 2-coloring of G - O. Precondition: G - O is bipartite.
OctDecomposition decomposition_from_oct(const Graph& g, const VertexSet& oct);

}  // namespace octbic
