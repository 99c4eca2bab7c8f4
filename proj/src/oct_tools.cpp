#include "octbic/oct_tools.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace octbic {

namespace {

// 2-coloring of the graph minus `removed`, BFS from roots in `order`.
// Conflicting edges are allowed; colors follow BFS parity.
std::vector<int> bfs_coloring(const Graph& g, const std::vector<bool>& removed,
                              const std::vector<Vertex>& order) {
  std::vector<int> color(g.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex root : order) {
    if (removed[root] || color[root] != -1) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (removed[w] || color[w] != -1) continue;
        color[w] = 1 - color[u];
        queue.push_back(w);
      }
    }
  }
  return color;
}

OctDecomposition from_coloring(const Graph& g, const std::vector<bool>& removed,
                               const std::vector<int>& color) {
  VertexSet left, right, oct;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (removed[v]) {
      oct.push_back(v);
    } else if (color[v] == 0) {
      left.push_back(v);
    } else {
      right.push_back(v);
    }
  }
  return OctDecomposition(g.num_vertices(), std::move(left), std::move(right),
                          std::move(oct));
}

std::vector<Vertex> ascending(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

}  // namespace

OctDecomposition greedy_oct(const Graph& g, std::uint64_t rng_seed) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order = ascending(n);
  if (rng_seed != 0) {
    std::mt19937_64 rng(rng_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<bool> removed(n, false);
  while (true) {
    const std::vector<int> color = bfs_coloring(g, removed, order);
    std::vector<std::size_t> conflicts(n, 0);
    bool any = false;
    for (const Edge& e : g.edges()) {
      if (removed[e.u] || removed[e.v] || color[e.u] != color[e.v]) continue;
      ++conflicts[e.u];
      ++conflicts[e.v];
      any = true;
    }
    if (!any) return from_coloring(g, removed, color);
    // max_element returns the first maximum, i.e. the smallest id.
    const auto worst = std::max_element(conflicts.begin(), conflicts.end());
    removed[static_cast<Vertex>(worst - conflicts.begin())] = true;
  }
}

OctDecomposition decomposition_from_oct(const Graph& g, const VertexSet& oct) {
  std::vector<bool> removed(g.num_vertices(), false);
  for (Vertex v : oct) removed.at(v) = true;
  if (!is_bipartite(g, &removed)) {
    throw std::invalid_argument("graph minus the given set is not bipartite");
  }
  return from_coloring(g, removed,
                       bfs_coloring(g, removed, ascending(g.num_vertices())));
}

std::optional<OctDecomposition> min_oct_exhaustive(const Graph& g,
                                                   std::size_t k_max) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> removed(n, false);
  for (std::size_t k = 0; k <= std::min(k_max, n); ++k) {
    // Lexicographic walk over k-subsets via a selection mask.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      if (is_bipartite(g, &pick)) {
        VertexSet oct;
        for (Vertex v = 0; v < n; ++v) {
          if (pick[v]) oct.push_back(v);
        }
        return decomposition_from_oct(g, oct);
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

}  // namespace octbic
