#pragma once

#include <span>
#include <vector>

#include "octbic/biclique.hpp"
#include "octbic/graph.hpp"

namespace octbic {

/// All maximal bicliques of the bipartite subgraph G[L ∪ R], in canonical
/// sorted order. Each result has one side inside `left` and the other inside
/// `right`. Vertices outside L ∪ R are ignored.
///
/// Branch-and-bound in the style of iMBEA: candidates are drawn from the
/// smaller part, the other side is the common-neighborhood closure, and a
/// branch is cut as soon as a previously processed candidate would extend it.
///
/// Throws std::invalid_argument if an edge lies inside L or inside R, and
/// Timeout if `deadline` passes.
std::vector<Biclique> bipartite_solve(const Graph& g, std::span<const Vertex> left,
                                      std::span<const Vertex> right,
                                      const Deadline& deadline = {});

}  // namespace octbic
