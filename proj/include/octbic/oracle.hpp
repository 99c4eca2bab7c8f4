#pragma once

#include <vector>

#include "octbic/biclique.hpp"
#include "octbic/graph.hpp"

namespace octbic::oracle {

inline constexpr std::size_t kMaxMibVertices = 16;
inline constexpr std::size_t kMaxMbVertices = 20;

/// All maximal induced bicliques by ternary enumeration (each vertex in X, in
/// Y or out), pruning partial assignments that already violate independence
/// or the join. Canonical, sorted. Throws std::invalid_argument when
/// n > kMaxMibVertices.
std::vector<Biclique> brute_mibs(const Graph& g);

/// All maximal bicliques: every nonempty Y with X* = ∩N(Y) nonempty and
/// Y ⊆ Y* = ∩N(X*) yields X* × Y*. Canonical, sorted. Throws
/// std::invalid_argument when n > kMaxMbVertices.
std::vector<Biclique> brute_mbs(const Graph& g);

}  // namespace octbic::oracle
