#include "octbic/mib.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "octbic/bipartite_mbe.hpp"
#include "octbic/kernels.hpp"
#include "octbic/vertex_set.hpp"

namespace octbic {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VertexSet all_vertices(const Graph& g) {
  VertexSet v(g.num_vertices());
  for (Vertex i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Grows `start` with S = V and records the result; with S = V the outside
// scan is empty, so an induced start always yields a MIB.
void add_seed(const Graph& g, std::span<const Vertex> everything, Biclique start,
              BicliqueStore& seen, std::vector<Biclique>& seeds) {
  auto mib = make_ind_maximal(g, std::move(start), everything);
  if (mib && seen.insert(*mib)) seeds.push_back(mib->canonical());
}

// Bron–Kerbosch on the complement graph, with pivoting.
class MisSearch {
 public:
  explicit MisSearch(const Graph& g) : g_(g) {}

  void run(VertexSet chosen, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) found_.push_back(chosen);
      return;
    }
    // Pivot: the vertex whose closed neighborhood covers the fewest candidates,
    // so the branching set P ∩ N[u] is smallest.
    Vertex pivot = candidates.front();
    std::size_t best = static_cast<std::size_t>(-1);
    for (const VertexSet* pool : {&candidates, &excluded}) {
      for (Vertex u : *pool) {
        const std::size_t cover = closed_hits(u, candidates);
        if (cover < best) {
          best = cover;
          pivot = u;
        }
      }
    }
    VertexSet branch;
    for (Vertex v : candidates) {
      if (v == pivot || g_.adjacent(v, pivot)) branch.push_back(v);
    }
    for (Vertex v : branch) {
      VertexSet next_chosen = chosen;
      next_chosen.insert(std::upper_bound(next_chosen.begin(), next_chosen.end(), v), v);
      run(std::move(next_chosen), outside_closed(v, candidates),
          outside_closed(v, excluded));
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  std::vector<VertexSet> take() { return std::move(found_); }

 private:
  std::size_t closed_hits(Vertex u, const VertexSet& pool) const {
    std::size_t hits = 0;
    for (Vertex w : pool) hits += (w == u || g_.adjacent(u, w));
    return hits;
  }

  VertexSet outside_closed(Vertex v, const VertexSet& pool) const {
    VertexSet out;
    for (Vertex w : pool) {
      if (w != v && !g_.adjacent(v, w)) out.push_back(w);
    }
    return out;
  }

  const Graph& g_;
  std::vector<VertexSet> found_;
};

}  // namespace

std::vector<VertexSet> enumerate_mis(const Graph& g) {
  if (g.num_vertices() == 0) return {};
  MisSearch search(g);
  search.run({}, all_vertices(g), {});
  auto found = search.take();
  std::sort(found.begin(), found.end());
  return found;
}

EnumerationResult run_framework(const Graph& g, const SeedConfig& cfg,
                                const RunOptions& options) {
  EnumerationResult result;
  result.bicliques = BicliqueStore(options.materialize);
  BicliqueStore& found = result.bicliques;
  std::deque<Biclique> queue;
  for (const Biclique& seed : cfg.seeds) {
    if (found.insert(seed)) queue.push_back(seed);
  }

  auto offer = [&](const std::optional<Biclique>& grown) {
    if (!grown) return;
    auto mib = make_ind_maximal(g, grown, cfg.iteration_set);
    if (mib && found.insert(*mib)) queue.push_back(std::move(*mib));
  };

  while (!queue.empty()) {
    if (options.deadline.expired()) {
      result.timed_out = true;
      break;
    }
    const Biclique current = std::move(queue.front());
    queue.pop_front();
    const Biclique flipped = current.swapped();
    for (Vertex j : cfg.iteration_set) {
      if (current.contains(j)) continue;
      offer(add_to(g, current, j));
      offer(add_to(g, flipped, j));
    }
  }
  result.count = found.size();
  return result;
}

SeedConfig seed_enum_mib(const Graph& g) {
  SeedConfig cfg;
  cfg.iteration_set = all_vertices(g);
  BicliqueStore seen(false);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    add_seed(g, cfg.iteration_set, Biclique({v}, {g.neighbors(v).front()}), seen,
             cfg.seeds);
  }
  return cfg;
}

SeedConfig seed_oct_mib2(const Graph& g, const OctDecomposition& d,
                         const Deadline& deadline) {
  if (!validate_oct(g, d).ok) {
    throw std::invalid_argument("decomposition leaves G[L ∪ R] non-bipartite");
  }
  SeedConfig cfg;
  cfg.iteration_set = d.oct();
  const VertexSet everything = all_vertices(g);
  BicliqueStore seen(false);

  for (const Biclique& mb : bipartite_solve(g, d.left(), d.right(), deadline)) {
    if (deadline.expired()) throw Timeout();
    add_seed(g, everything, mb, seen, cfg.seeds);
  }

  const VertexSet bipartite_part = d.bipartite_part();
  for (Vertex v : d.oct()) {
    const VertexSet inner = sets::intersect(g.neighbors(v), bipartite_part);
    if (inner.empty()) continue;
    const Subgraph sub = induced_subgraph(g, inner);
    for (const VertexSet& local : enumerate_mis(sub.graph)) {
      if (deadline.expired()) throw Timeout();
      VertexSet side;
      side.reserve(local.size());
      for (Vertex i : local) side.push_back(sub.to_original[i]);
      add_seed(g, everything, Biclique(std::move(side), {v}), seen, cfg.seeds);
    }
  }

  for (Vertex v : d.oct()) {
    if (g.degree(v) == 0) continue;
    add_seed(g, everything, Biclique({v}, {g.neighbors(v).front()}), seen, cfg.seeds);
  }
  return cfg;
}

EnumerationResult enum_mib(const Graph& g, const RunOptions& options) {
  const auto start = Clock::now();
  EnumerationResult result = run_framework(g, seed_enum_mib(g), options);
  result.algorithm = "enum-mib";
  result.wall_time = seconds_since(start);
  return result;
}

EnumerationResult oct_mib2(const Graph& g, const OctDecomposition& d,
                           const RunOptions& options) {
  const auto start = Clock::now();
  EnumerationResult result;
  try {
    result = run_framework(g, seed_oct_mib2(g, d, options.deadline), options);
  } catch (const Timeout&) {
    result.bicliques = BicliqueStore(options.materialize);
    result.timed_out = true;
  }
  result.algorithm = "oct-mib2";
  result.wall_time = seconds_since(start);
  return result;
}

}  // namespace octbic
