#pragma once

#include <cstdint>
#include <utility>

#include "octbic/decomposition.hpp"
#include "octbic/graph.hpp"

namespace octbic {

/// Parameters of a synthetic near-bipartite instance. Vertices 0..n_l-1 form
/// L, the next n_r form R and the last n_o form O.
struct GeneratorParams {
  std::size_t n_l = 0;
  std::size_t n_r = 0;
  std::size_t n_o = 0;
  double d_lr = 0.0;     // expected density between L and R
  double d_cross = 0.0;  // expected density between O and L ∪ R
  double d_o = 0.0;      // edge probability inside O
  double cv_lr = 0.0;    // coefficient of variation of R-vertex degrees
  double cv_cross = 0.0; // coefficient of variation of O-vertex cross degrees
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for densities outside [0, 1] or negative cv.
  void validate() const;
};

/// Builds a graph and its naive decomposition [L, R, O].
///
/// Each R vertex draws a degree from a normal distribution with mean
/// d_lr·n_l and standard deviation cv_lr·mean (rounded, clamped to
/// [0, n_l]) and picks that many distinct neighbors uniformly from L. O
/// vertices do the same against L ∪ R with d_cross and cv_cross. Pairs
/// inside O are joined independently with probability d_o.
///
/// Random draws happen in a fixed order: R degrees by ascending id, R
/// neighbor samples, O degrees, O neighbor samples, then O pairs (i, j)
/// ascending. Output is a pure function of the parameters.
std::pair<Graph, OctDecomposition> generate(const GeneratorParams& p);

struct DensityReport {
  double d_lr = 0.0;
  double d_cross = 0.0;
  double d_o = 0.0;
  double cv_lr = 0.0;     // of R-vertex degrees into L
  double cv_cross = 0.0;  // of O-vertex degrees into L ∪ R
};

/// Realized densities and degree variation for a decomposed graph. Empty
/// denominators give 0.
DensityReport realized_stats(const Graph& g, const OctDecomposition& d);

}  // namespace octbic
