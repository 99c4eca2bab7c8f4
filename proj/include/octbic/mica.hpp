#pragma once

#include "octbic/biclique.hpp"
#include "octbic/decomposition.hpp"
#include "octbic/graph.hpp"

namespace octbic {

/// Maximal bicliques of a general graph given an OCT decomposition.
///
/// The maximal bicliques of G[L ∪ R] are computed by bipartite_solve and
/// made maximal in G; stars of the OCT vertices form the consensus seeds
/// C0. Sweeps over C0 × C then add make_maximal(consensus) results until a
/// full sweep inserts nothing. Both sides of every biclique are stored.
EnumerationResult oct_mica(const Graph& g, const OctDecomposition& d,
                           const RunOptions& options = {});

/// Baseline consensus enumeration: C0 holds the stars of every
/// non-isolated vertex and C starts as C0.
EnumerationResult mica(const Graph& g, const RunOptions& options = {});

}  // namespace octbic
