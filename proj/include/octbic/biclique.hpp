#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "octbic/graph.hpp"

namespace octbic {

/// A pair of vertex sets X × Y. The pair is unordered for comparison
/// purposes: equality and ordering use the canonical orientation, in which
/// the lexicographically smaller sorted side comes first. The stored
/// orientation still matters to the kernels (AddTo grows side X).
class Biclique {
 public:
  Biclique() = default;
  /// Sides are sorted on construction.
  Biclique(VertexSet x, VertexSet y);

  const VertexSet& x() const { return x_; }
  const VertexSet& y() const { return y_; }

  /// Same biclique with X and Y exchanged.
  Biclique swapped() const { return Biclique(y_, x_, Sorted{}); }
  Biclique canonical() const;
  bool is_canonical() const { return !(y_ < x_); }

  bool has_empty_side() const { return x_.empty() || y_.empty(); }
  std::size_t num_vertices() const { return x_.size() + y_.size(); }
  bool contains(Vertex v) const;

  /// Delimited decimal rendering of the canonical form, e.g. "0,2|1".
  std::string key() const;

  friend bool operator==(const Biclique& a, const Biclique& b);
  friend bool operator<(const Biclique& a, const Biclique& b);

 private:
  struct Sorted {};
  Biclique(VertexSet x, VertexSet y, Sorted) : x_(std::move(x)), y_(std::move(y)) {}

  VertexSet x_;
  VertexSet y_;
};

/// Prints the canonical key.
std::ostream& operator<<(std::ostream& out, const Biclique& b);

/// Every cross pair adjacent, sides nonempty and disjoint.
bool is_biclique(const Graph& g, const Biclique& b);
/// is_biclique plus both sides independent.
bool is_induced_biclique(const Graph& g, const Biclique& b);

/// "x1,x2,... | y1,y2,..." using the graph's external labels.
std::string format_biclique(const Graph& g, const Biclique& b);

/// Deduplicating collection of canonical bicliques kept in sorted order.
/// In count-only mode only the key index is retained.
class BicliqueStore {
 public:
  explicit BicliqueStore(bool materialize = true) : materialize_(materialize) {}

  /// True when `b` was not present before.
  bool insert(const Biclique& b);
  bool contains(const Biclique& b) const { return keys_.contains(b.key()); }

  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  bool materialized() const { return materialize_; }

  using const_iterator = std::set<Biclique>::const_iterator;
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::set<Biclique>& items() const { return items_; }
  std::vector<Biclique> to_vector() const { return {items_.begin(), items_.end()}; }

 private:
  bool materialize_;
  std::set<Biclique> items_;
  std::unordered_set<std::string> keys_;
};

struct EnumerationResult {
  std::string algorithm;
  BicliqueStore bicliques;
  std::size_t count = 0;
  double wall_time = 0.0;  // seconds
  bool timed_out = false;
};

/// Wall-clock budget; a default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(double seconds);

  bool expired() const { return at_ && Clock::now() >= *at_; }
  bool bounded() const { return at_.has_value(); }

 private:
  std::optional<Clock::time_point> at_;
};

/// Thrown by routines that abandon work when their deadline passes.
class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("deadline exceeded") {}
};

struct RunOptions {
  Deadline deadline;
  /// When false only counts are kept.
  bool materialize = true;
};

}  // namespace octbic
