#include "octbic/graph.hpp"

#include "text_io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace octbic {

Graph::Graph(std::size_t n) : adjacency_(n), keyed_adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex >= n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (!g.keyed_adjacency_[e.u].insert(e.v).second) {
      throw InputError("duplicate edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    g.keyed_adjacency_[e.v].insert(e.u);
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.num_edges_ = edges.size();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::set_label_map(std::vector<Vertex> labels) {
  if (!labels.empty() && labels.size() != adjacency_.size()) {
    throw std::invalid_argument("label map size does not match vertex count");
  }
  labels_ = std::move(labels);
}

Graph load_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw InputError("missing 'n m' header");
  const auto header = detail::parse_numbers(lines[0].second, lines[0].first);
  if (header.size() != 2) {
    throw InputError("line " + std::to_string(lines[0].first) +
                     ": header must be 'n m'");
  }
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  if (lines.size() - 1 != m) {
    throw InputError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    const auto ids = detail::parse_numbers(line, line_no);
    if (ids.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.push_back({std::min(ids[0], ids[1]), std::max(ids[0], ids[1])});
  }
  return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
  return load_graph(detail::read_file(path));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize_graph(g);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  Subgraph sub;
  sub.to_original.assign(s.begin(), s.end());
  std::sort(sub.to_original.begin(), sub.to_original.end());
  sub.to_original.erase(std::unique(sub.to_original.begin(), sub.to_original.end()),
                        sub.to_original.end());
  std::vector<Vertex> to_local(g.num_vertices(), kAbsent);
  for (Vertex i = 0; i < sub.to_original.size(); ++i) {
    const Vertex v = sub.to_original[i];
    if (v >= g.num_vertices()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    }
    to_local[v] = i;
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < sub.to_original.size(); ++i) {
    for (Vertex w : g.neighbor_index(sub.to_original[i])) {
      const Vertex j = to_local[w];
      if (j != kAbsent && i < j) edges.push_back({i, j});
    }
  }
  sub.graph = Graph::from_edges(sub.to_original.size(), edges);
  return sub;
}

bool is_bipartite(const Graph& g, const std::vector<bool>* skip) {
  const std::size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1 || (skip && (*skip)[root])) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (skip && (*skip)[w]) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace octbic
