#include "octbic/kernels.hpp"

#include <cassert>
#include <stdexcept>

#include "octbic/vertex_set.hpp"

namespace octbic {

namespace {

// Vertices adjacent to every member of `side`; sorted because candidates are
// drawn from the sorted neighborhood of side[0].
VertexSet common_neighborhood(const Graph& g, const VertexSet& side) {
  assert(!side.empty());
  std::vector<std::size_t> hits(g.num_vertices(), 0);
  for (Vertex u : side) {
    for (Vertex w : g.neighbors(u)) ++hits[w];
  }
  VertexSet out;
  for (Vertex w : g.neighbors(side.front())) {
    if (hits[w] == side.size()) out.push_back(w);
  }
  return out;
}

}  // namespace

Biclique make_maximal(const Graph& g, const Biclique& b) {
  assert(is_biclique(g, b));
  VertexSet x = common_neighborhood(g, b.y());
  VertexSet y = common_neighborhood(g, x);
  return Biclique(std::move(x), std::move(y));
}

std::vector<Biclique> consensus(const Biclique& a, const Biclique& b) {
  std::vector<Biclique> out;
  out.reserve(4);
  auto keep = [&out](VertexSet x, VertexSet y) {
    if (!x.empty() && !y.empty()) out.emplace_back(std::move(x), std::move(y));
  };
  keep(sets::unite(a.x(), b.x()), sets::intersect(a.y(), b.y()));
  keep(sets::intersect(a.x(), b.x()), sets::unite(a.y(), b.y()));
  keep(sets::unite(a.x(), b.y()), sets::intersect(a.y(), b.x()));
  keep(sets::intersect(a.x(), b.y()), sets::unite(a.y(), b.x()));
  return out;
}

std::optional<Biclique> make_ind_maximal(const Graph& g,
                                         const std::optional<Biclique>& c,
                                         std::span<const Vertex> s) {
  if (!c || c->has_empty_side()) return std::nullopt;
  assert(is_induced_biclique(g, *c));

  enum : unsigned char { kNone, kSide1, kSide2 };
  const std::size_t n = g.num_vertices();
  std::vector<unsigned char> member(n, kNone);
  VertexSet c1 = c->x();
  VertexSet c2 = c->y();
  for (Vertex v : c1) member[v] = kSide1;
  for (Vertex v : c2) member[v] = kSide2;

  // v may join C2 when it sees all of C1 and none of C2; symmetric for C1.
  auto fits = [&](Vertex v, unsigned char into) {
    std::size_t hits1 = 0;
    std::size_t hits2 = 0;
    for (Vertex w : g.neighbors(v)) {
      hits1 += member[w] == kSide1;
      hits2 += member[w] == kSide2;
    }
    return into == kSide2 ? hits1 == c1.size() && hits2 == 0
                          : hits2 == c2.size() && hits1 == 0;
  };

  std::vector<bool> in_s(n, false);
  for (Vertex v : s) in_s[v] = true;

  VertexSet candidates;
  for (Vertex v : s) {
    if (member[v] == kNone) candidates.push_back(v);
  }
  VertexSet remaining;
  for (Vertex v : candidates) {
    if (fits(v, kSide2)) {
      member[v] = kSide2;
      c2.push_back(v);
    } else {
      remaining.push_back(v);
    }
  }
  for (Vertex v : remaining) {
    if (fits(v, kSide1)) {
      member[v] = kSide1;
      c1.push_back(v);
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (in_s[v] || member[v] != kNone) continue;
    if (fits(v, kSide2)) return std::nullopt;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_s[v] || member[v] != kNone) continue;
    if (fits(v, kSide1)) return std::nullopt;
  }
  return Biclique(std::move(c1), std::move(c2));
}

std::optional<Biclique> add_to(const Graph& g, const Biclique& c, Vertex v) {
  if (c.contains(v)) {
    throw std::invalid_argument("add_to: vertex " + std::to_string(v) +
                                " already in the biclique");
  }
  const auto nbrs = g.neighbors(v);
  VertexSet side2 = sets::intersect(c.y(), nbrs);
  if (side2.empty()) return std::nullopt;
  const Vertex single[] = {v};
  VertexSet side1 = sets::difference(sets::unite(c.x(), single), nbrs);
  return Biclique(std::move(side1), std::move(side2));
}

}  // namespace octbic
