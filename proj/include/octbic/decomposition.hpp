#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octbic/graph.hpp"

namespace octbic {

enum class Side : std::uint8_t { L, R, O };

/// Partition [L, R, O] of the vertex set such that G[L ∪ R] is bipartite
/// with parts L and R. Construction only checks the partition; use
/// validate_oct for the bipartiteness condition.
class OctDecomposition {
 public:
  OctDecomposition() = default;

  /// Throws InputError if the sets overlap, fail to cover 0..n-1 or contain
  /// out-of-range ids.
  OctDecomposition(std::size_t n, VertexSet left, VertexSet right, VertexSet oct);

  const VertexSet& left() const { return left_; }
  const VertexSet& right() const { return right_; }
  const VertexSet& oct() const { return oct_; }
  Side side_of(Vertex v) const { return side_[v]; }
  std::size_t num_vertices() const { return side_.size(); }

  std::size_t n_left() const { return left_.size(); }
  std::size_t n_right() const { return right_.size(); }
  std::size_t n_oct() const { return oct_.size(); }

  /// L ∪ R, sorted.
  VertexSet bipartite_part() const;

 private:
  VertexSet left_;
  VertexSet right_;
  VertexSet oct_;
  std::vector<Side> side_;
};

struct OctValidation {
  bool ok = false;
  std::vector<Edge> violations;  // edges inside L or inside R
};

/// Throws InputError when the decomposition is sized for a different graph.
OctValidation validate_oct(const Graph& g, const OctDecomposition& d);

/// Parses "L: ...", "R: ...", "O: ..." lines (comments with '#').
OctDecomposition load_decomposition(std::string_view text, std::size_t n);
OctDecomposition read_decomposition_file(const std::string& path, std::size_t n);

std::string serialize_decomposition(const OctDecomposition& d);
void write_decomposition_file(const OctDecomposition& d, const std::string& path);

}  // namespace octbic
