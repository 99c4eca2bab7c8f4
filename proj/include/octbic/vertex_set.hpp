#pragma once

#include <algorithm>
#include <iterator>
#include <span>

#include "octbic/graph.hpp"

// Merge-style operations over sorted vertex sequences.
namespace octbic::sets {

inline VertexSet intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline VertexSet unite(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::size_t intersection_size(std::span<const Vertex> a,
                                     std::span<const Vertex> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

inline bool contains(std::span<const Vertex> a, Vertex v) {
  return std::binary_search(a.begin(), a.end(), v);
}

inline bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b) {
  return intersection_size(a, b) == 0;
}

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace octbic::sets
