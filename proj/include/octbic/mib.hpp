#pragma once

#include <vector>

#include "octbic/biclique.hpp"
#include "octbic/decomposition.hpp"
#include "octbic/graph.hpp"

namespace octbic {

/// Input to the MIB enumeration framework: the vertices tried as extensions
/// of every discovered MIB, and the initial MIBs.
///
/// The framework returns exactly the MIBs of G provided that for every MIB
/// A × B there is a seed A' × B' with A \ I ⊆ A', B \ I ⊆ B' and
/// (A ∪ B) ∩ (A' ∪ B') ≠ ∅, where I is the iteration set.
struct SeedConfig {
  VertexSet iteration_set;
  std::vector<Biclique> seeds;  // canonical, duplicate-free
};

/// Queue-driven closure: every popped MIB X × Y is extended by each
/// j ∈ I \ (X ∪ Y) via AddTo on both orientations followed by
/// MakeIndMaximal(·, I); unseen results are queued. FIFO order, extension
/// vertices in ascending id. The deadline is checked once per pop.
EnumerationResult run_framework(const Graph& g, const SeedConfig& cfg,
                                const RunOptions& options = {});

/// I = V; one seed per non-isolated vertex v, grown from {v} × {u} with u
/// the smallest neighbor of v.
SeedConfig seed_enum_mib(const Graph& g);

/// I = O. Seeds are the union of
///   - the maximal bicliques of G[L ∪ R], grown to MIBs of G;
///   - I × {v} for v ∈ O and each maximal independent set I of
///     G[N(v) ∩ (L ∪ R)], grown to MIBs;
///   - {v} × {u} for non-isolated v ∈ O, u its smallest neighbor, grown.
/// Throws std::invalid_argument for an invalid decomposition and Timeout if
/// the deadline passes while seeding.
SeedConfig seed_oct_mib2(const Graph& g, const OctDecomposition& d,
                         const Deadline& deadline = {});

/// All maximal independent sets of g, each sorted, in lexicographic order.
/// Exponential in general; meant for small neighborhood subgraphs.
std::vector<VertexSet> enumerate_mis(const Graph& g);

/// Enumerates MIBs with I = V.
EnumerationResult enum_mib(const Graph& g, const RunOptions& options = {});

/// Enumerates MIBs with I = O of the given decomposition.
EnumerationResult oct_mib2(const Graph& g, const OctDecomposition& d,
                           const RunOptions& options = {});

}  // namespace octbic
