#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace octbic {

using Vertex = std::size_t;

/// Sorted ascending, duplicate-free sequence of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed graph or decomposition input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Two views of the same edge set are kept: sorted neighbor vectors (used by
/// every merge-style set operation) and hashed neighbor sets (constant-time
/// adjacency tests, cheap subgraph extraction).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  const std::unordered_set<Vertex>& neighbor_index(Vertex v) const {
    return keyed_adjacency_[v];
  }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const {
    return keyed_adjacency_[u].contains(v);
  }

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  /// External label of an internal id; identity unless a label map was set.
  Vertex label(Vertex v) const {
    return labels_.empty() ? v : labels_[v];
  }
  const std::vector<Vertex>& label_map() const { return labels_; }
  void set_label_map(std::vector<Vertex> labels);

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::unordered_set<Vertex>> keyed_adjacency_;
  std::vector<Vertex> labels_;
  std::size_t num_edges_ = 0;
};

/// Parses the edge-list text format: '#' comment lines, a header "n m", then
/// m lines "u v".
Graph load_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Normalized edge-list text (sorted edges, u < v).
std::string serialize_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

struct Subgraph {
  Graph graph;
  /// to_original[i] is the id in the parent graph of subgraph vertex i.
  std::vector<Vertex> to_original;
};

/// Subgraph induced by `s`, relabeled to 0..|s|-1 in ascending id order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Connected-component 2-coloring; false when an odd cycle exists. `skip`
/// (optional, size n) marks vertices treated as deleted.
bool is_bipartite(const Graph& g, const std::vector<bool>* skip = nullptr);

}  // namespace octbic
