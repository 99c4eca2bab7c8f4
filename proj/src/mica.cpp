#include "octbic/mica.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

#include "octbic/bipartite_mbe.hpp"
#include "octbic/kernels.hpp"

namespace octbic {

namespace {

using Clock = std::chrono::steady_clock;

Biclique star(const Graph& g, Vertex v) {
  const auto nbrs = g.neighbors(v);
  return make_maximal(g, Biclique({v}, VertexSet(nbrs.begin(), nbrs.end())));
}

// Repeats full C0 × C sweeps until nothing new appears. `found` is the
// sorted working set C; std::set iterators stay valid across insertion, so
// the sweep walks C in order and also reaches entries inserted ahead of it.
void consensus_closure(const Graph& g, const std::vector<Biclique>& seeds,
                       BicliqueStore& found, const Deadline& deadline) {
  bool inserted = true;
  while (inserted) {
    inserted = false;
    for (const Biclique& b1 : seeds) {
      for (const Biclique& b2 : found.items()) {
        if (deadline.expired()) throw Timeout();
        for (const Biclique& candidate : consensus(b1, b2)) {
          if (found.insert(make_maximal(g, candidate))) inserted = true;
        }
      }
    }
  }
}

EnumerationResult finish(EnumerationResult result, const RunOptions& options,
                         Clock::time_point start) {
  result.count = result.bicliques.size();
  if (!options.materialize) {
    BicliqueStore counts_only(false);
    for (const Biclique& b : result.bicliques) counts_only.insert(b);
    result.bicliques = std::move(counts_only);
  }
  result.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

EnumerationResult oct_mica(const Graph& g, const OctDecomposition& d,
                           const RunOptions& options) {
  const auto start = Clock::now();
  if (!validate_oct(g, d).ok) {
    throw std::invalid_argument("decomposition leaves G[L ∪ R] non-bipartite");
  }
  EnumerationResult result;
  result.algorithm = "oct-mica";
  try {
    for (const Biclique& mb : bipartite_solve(g, d.left(), d.right(), options.deadline)) {
      result.bicliques.insert(make_maximal(g, mb));
    }
    std::vector<Biclique> seeds;
    for (Vertex v : d.oct()) {
      if (g.degree(v) == 0) continue;
      seeds.push_back(star(g, v));
      result.bicliques.insert(seeds.back());
    }
    consensus_closure(g, seeds, result.bicliques, options.deadline);
  } catch (const Timeout&) {
    result.timed_out = true;
  }
  return finish(std::move(result), options, start);
}

EnumerationResult mica(const Graph& g, const RunOptions& options) {
  const auto start = Clock::now();
  EnumerationResult result;
  result.algorithm = "mica";
  std::vector<Biclique> seeds;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    seeds.push_back(star(g, v));
    result.bicliques.insert(seeds.back());
  }
  try {
    consensus_closure(g, seeds, result.bicliques, options.deadline);
  } catch (const Timeout&) {
    result.timed_out = true;
  }
  return finish(std::move(result), options, start);
}

}  // namespace octbic
