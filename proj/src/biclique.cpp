#include "octbic/biclique.hpp"

#include <algorithm>
#include <sstream>

#include "octbic/vertex_set.hpp"

namespace octbic {

Biclique::Biclique(VertexSet x, VertexSet y) : x_(std::move(x)), y_(std::move(y)) {
  std::sort(x_.begin(), x_.end());
  std::sort(y_.begin(), y_.end());
}

Biclique Biclique::canonical() const { return is_canonical() ? *this : swapped(); }

bool Biclique::contains(Vertex v) const {
  return sets::contains(x_, v) || sets::contains(y_, v);
}

std::string Biclique::key() const {
  const bool keep = is_canonical();
  const VertexSet& first = keep ? x_ : y_;
  const VertexSet& second = keep ? y_ : x_;
  std::string out;
  out.reserve(4 * (first.size() + second.size()) + 1);
  auto append = [&out](const VertexSet& side) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(side[i]);
    }
  };
  append(first);
  out.push_back('|');
  append(second);
  return out;
}

bool operator==(const Biclique& a, const Biclique& b) {
  return (a.x_ == b.x_ && a.y_ == b.y_) || (a.x_ == b.y_ && a.y_ == b.x_);
}

bool operator<(const Biclique& a, const Biclique& b) {
  const bool ka = a.is_canonical();
  const bool kb = b.is_canonical();
  const VertexSet& a1 = ka ? a.x_ : a.y_;
  const VertexSet& a2 = ka ? a.y_ : a.x_;
  const VertexSet& b1 = kb ? b.x_ : b.y_;
  const VertexSet& b2 = kb ? b.y_ : b.x_;
  if (a1 != b1) return a1 < b1;
  return a2 < b2;
}

std::ostream& operator<<(std::ostream& out, const Biclique& b) {
  return out << b.key();
}

bool is_biclique(const Graph& g, const Biclique& b) {
  if (b.has_empty_side() || !sets::disjoint(b.x(), b.y())) return false;
  for (Vertex u : b.x()) {
    if (u >= g.num_vertices()) return false;
    for (Vertex v : b.y()) {
      if (v >= g.num_vertices() || !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

namespace {

bool independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_induced_biclique(const Graph& g, const Biclique& b) {
  return is_biclique(g, b) && independent(g, b.x()) && independent(g, b.y());
}

std::string format_biclique(const Graph& g, const Biclique& b) {
  const Biclique c = b.canonical();
  std::ostringstream out;
  auto side = [&](const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ',';
      out << g.label(s[i]);
    }
  };
  side(c.x());
  out << " | ";
  side(c.y());
  return out.str();
}

bool BicliqueStore::insert(const Biclique& b) {
  if (!keys_.insert(b.key()).second) return false;
  if (materialize_) items_.insert(b.canonical());
  return true;
}

Deadline Deadline::after(double seconds) {
  Deadline d;
  d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(seconds));
  return d;
}

}  // namespace octbic
