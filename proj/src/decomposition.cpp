#include "octbic/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "octbic/vertex_set.hpp"
#include "text_io.hpp"

namespace octbic {

OctDecomposition::OctDecomposition(std::size_t n, VertexSet left, VertexSet right,
                                   VertexSet oct)
    : left_(sets::normalized(std::move(left))),
      right_(sets::normalized(std::move(right))),
      oct_(sets::normalized(std::move(oct))),
      side_(n, Side::O) {
  std::vector<bool> seen(n, false);
  auto claim = [&](const VertexSet& part, Side side, const char* tag) {
    for (Vertex v : part) {
      if (v >= n) {
        throw InputError(std::string("vertex ") + std::to_string(v) + " in " + tag +
                         " is out of range for n=" + std::to_string(n));
      }
      if (seen[v]) {
        throw InputError("vertex " + std::to_string(v) +
                         " appears in more than one part");
      }
      seen[v] = true;
      side_[v] = side;
    }
  };
  claim(left_, Side::L, "L");
  claim(right_, Side::R, "R");
  claim(oct_, Side::O, "O");
  auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end()) {
    throw InputError("vertex " + std::to_string(missing - seen.begin()) +
                     " is not covered by the decomposition");
  }
}

VertexSet OctDecomposition::bipartite_part() const { return sets::unite(left_, right_); }

OctValidation validate_oct(const Graph& g, const OctDecomposition& d) {
  if (d.num_vertices() != g.num_vertices()) {
    throw InputError("decomposition covers " + std::to_string(d.num_vertices()) +
                     " vertices but the graph has " +
                     std::to_string(g.num_vertices()));
  }
  OctValidation result;
  for (const Edge& e : g.edges()) {
    const Side a = d.side_of(e.u);
    const Side b = d.side_of(e.v);
    if (a == b && a != Side::O) result.violations.push_back(e);
  }
  result.ok = result.violations.empty();
  return result;
}

OctDecomposition load_decomposition(std::string_view text, std::size_t n) {
  VertexSet parts[3];
  bool present[3] = {false, false, false};
  for (auto [line_no, line] : detail::content_lines(text)) {
    if (line.size() < 2 || line[1] != ':') {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'L:', 'R:' or 'O:' tag");
    }
    int idx = -1;
    switch (line[0]) {
      case 'L': idx = 0; break;
      case 'R': idx = 1; break;
      case 'O': idx = 2; break;
      default:
        throw InputError("line " + std::to_string(line_no) + ": unknown tag '" +
                         std::string(1, line[0]) + "'");
    }
    if (present[idx]) {
      throw InputError("line " + std::to_string(line_no) + ": repeated tag");
    }
    present[idx] = true;
    parts[idx] = detail::parse_numbers(line.substr(2), line_no);
  }
  if (!present[0] || !present[1] || !present[2]) {
    throw InputError("decomposition needs L:, R: and O: lines");
  }
  return OctDecomposition(n, std::move(parts[0]), std::move(parts[1]),
                          std::move(parts[2]));
}

OctDecomposition read_decomposition_file(const std::string& path, std::size_t n) {
  return load_decomposition(detail::read_file(path), n);
}

std::string serialize_decomposition(const OctDecomposition& d) {
  std::ostringstream out;
  auto line = [&](char tag, const VertexSet& part) {
    out << tag << ':';
    for (Vertex v : part) out << ' ' << v;
    out << '\n';
  };
  line('L', d.left());
  line('R', d.right());
  line('O', d.oct());
  return out.str();
}

void write_decomposition_file(const OctDecomposition& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize_decomposition(d);
}

}  // namespace octbic
