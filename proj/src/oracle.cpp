#include "octbic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace octbic::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_size(const Graph& g, std::size_t cap, const char* who) {
  if (g.num_vertices() > cap) {
    throw std::invalid_argument(std::string(who) + ": n=" +
                                std::to_string(g.num_vertices()) +
                                " exceeds the limit of " + std::to_string(cap));
  }
}

std::vector<Biclique> canonical_sorted(std::vector<Biclique> found) {
  for (Biclique& b : found) b = b.canonical();
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

class TernarySearch {
 public:
  explicit TernarySearch(const Graph& g)
      : n_(g.num_vertices()), adj_(adjacency_masks(g)) {}

  void run(std::size_t v, Mask x, Mask y) {
    if (v == n_) {
      if (x && y && maximal(x, y)) found_.emplace_back(to_set(x), to_set(y));
      return;
    }
    const Mask bit = Mask{1} << v;
    run(v + 1, x, y);
    // v joins X: independent of X, adjacent to all of Y so far.
    if ((adj_[v] & x) == 0 && (adj_[v] & y) == y) run(v + 1, x | bit, y);
    if ((adj_[v] & y) == 0 && (adj_[v] & x) == x) run(v + 1, x, y | bit);
  }

  std::vector<Biclique> take() { return std::move(found_); }

 private:
  bool maximal(Mask x, Mask y) const {
    for (std::size_t w = 0; w < n_; ++w) {
      const Mask bit = Mask{1} << w;
      if ((x | y) & bit) continue;
      const Mask nw = adj_[w];
      if ((nw & x) == 0 && (nw & y) == y) return false;
      if ((nw & y) == 0 && (nw & x) == x) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<Biclique> found_;
};

}  // namespace

std::vector<Biclique> brute_mibs(const Graph& g) {
  check_size(g, kMaxMibVertices, "brute_mibs");
  TernarySearch search(g);
  search.run(0, 0, 0);
  return canonical_sorted(search.take());
}

std::vector<Biclique> brute_mbs(const Graph& g) {
  check_size(g, kMaxMbVertices, "brute_mbs");
  const std::size_t n = g.num_vertices();
  const std::vector<Mask> adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  auto common = [&](Mask s) {
    Mask out = all;
    for (Mask rest = s; rest; rest &= rest - 1) out &= adj[std::countr_zero(rest)];
    return out;
  };
  std::vector<Biclique> found;
  for (Mask y = 1; y <= all; ++y) {
    const Mask x_star = common(y);
    if (!x_star) continue;
    const Mask y_star = common(x_star);
    if ((y & ~y_star) == 0) found.emplace_back(to_set(x_star), to_set(y_star));
  }
  return canonical_sorted(std::move(found));
}

}  // namespace octbic::oracle
