#include "octbic/bipartite_mbe.hpp"

#include <algorithm>
#include <stdexcept>

#include "octbic/vertex_set.hpp"

namespace octbic {

namespace {

class BicliqueSearch {
 public:
  BicliqueSearch(std::vector<VertexSet> part_neighbors, const Deadline& deadline)
      : nbrs_(std::move(part_neighbors)), deadline_(deadline) {}

  // `closed` is the common neighborhood (in the opposite part) of `chosen`.
  // Candidates in `pending` may still be added; those in `done` were already
  // branched on at an ancestor and witness non-maximality.
  void expand(const VertexSet& closed, const VertexSet& chosen, VertexSet pending,
              VertexSet done) {
    while (!pending.empty()) {
      if (deadline_.expired()) throw Timeout();
      const Vertex x = pending.front();
      pending.erase(pending.begin());

      VertexSet closed_next = sets::intersect(closed, nbrs_[x]);
      if (closed_next.empty()) {
        done.push_back(x);
        continue;
      }

      bool maximal = true;
      VertexSet done_next;
      for (Vertex v : done) {
        const std::size_t hits = sets::intersection_size(nbrs_[v], closed_next);
        if (hits == closed_next.size()) {
          maximal = false;
          break;
        }
        if (hits > 0) done_next.push_back(v);
      }

      if (maximal) {
        VertexSet chosen_next = chosen;
        chosen_next.push_back(x);
        std::vector<std::pair<std::size_t, Vertex>> ranked;
        for (Vertex v : pending) {
          const std::size_t hits = sets::intersection_size(nbrs_[v], closed_next);
          if (hits == closed_next.size()) {
            chosen_next.push_back(v);
          } else if (hits > 0) {
            ranked.emplace_back(hits, v);
          }
        }
        // Fewest common neighbors first keeps the subproblems small.
        std::sort(ranked.begin(), ranked.end());
        VertexSet pending_next;
        pending_next.reserve(ranked.size());
        for (const auto& [hits, v] : ranked) pending_next.push_back(v);

        found_.emplace_back(closed_next, chosen_next);
        if (!pending_next.empty()) {
          expand(closed_next, chosen_next, std::move(pending_next),
                 std::move(done_next));
        }
      }
      done.push_back(x);
    }
  }

  std::vector<Biclique> take() { return std::move(found_); }

 private:
  std::vector<VertexSet> nbrs_;  // indexed by global id; only candidates filled
  const Deadline& deadline_;
  std::vector<Biclique> found_;
};

}  // namespace

std::vector<Biclique> bipartite_solve(const Graph& g, std::span<const Vertex> left,
                                      std::span<const Vertex> right,
                                      const Deadline& deadline) {
  const std::size_t n = g.num_vertices();
  std::vector<char> part(n, 0);
  for (Vertex v : left) part[v] = 1;
  for (Vertex v : right) {
    if (part[v] == 1) throw std::invalid_argument("L and R overlap");
    part[v] = 2;
  }
  for (Vertex v : left) {
    for (Vertex w : g.neighbors(v)) {
      if (part[w] == 1) throw std::invalid_argument("edge inside L");
    }
  }
  for (Vertex v : right) {
    for (Vertex w : g.neighbors(v)) {
      if (part[w] == 2) throw std::invalid_argument("edge inside R");
    }
  }

  const bool branch_left = left.size() <= right.size();
  const std::span<const Vertex> branch = branch_left ? left : right;
  const std::span<const Vertex> closure = branch_left ? right : left;
  const char closure_tag = branch_left ? 2 : 1;

  std::vector<VertexSet> nbrs(n);
  std::vector<std::pair<std::size_t, Vertex>> ranked;
  for (Vertex v : branch) {
    for (Vertex w : g.neighbors(v)) {
      if (part[w] == closure_tag) nbrs[v].push_back(w);
    }
    if (!nbrs[v].empty()) ranked.emplace_back(nbrs[v].size(), v);
  }
  std::sort(ranked.begin(), ranked.end());
  VertexSet pending;
  for (const auto& [deg, v] : ranked) pending.push_back(v);

  VertexSet all_closure(closure.begin(), closure.end());
  std::sort(all_closure.begin(), all_closure.end());

  BicliqueSearch search(std::move(nbrs), deadline);
  search.expand(all_closure, {}, std::move(pending), {});
  std::vector<Biclique> found = search.take();
  for (Biclique& b : found) b = b.canonical();
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace octbic
