#include "octbic/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace octbic {

void GeneratorParams::validate() const {
  auto density = [](double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                  std::to_string(value));
    }
  };
  density(d_lr, "d_lr");
  density(d_cross, "d_cross");
  density(d_o, "d_o");
  if (!(cv_lr >= 0.0)) throw std::invalid_argument("cv_lr must be >= 0");
  if (!(cv_cross >= 0.0)) throw std::invalid_argument("cv_cross must be >= 0");
}

namespace {

using Rng = std::mt19937_64;

std::size_t draw_degree(Rng& rng, double mean, double cv, std::size_t pool) {
  const double stddev = cv * mean;
  double value = mean;
  if (stddev > 0.0) value = std::normal_distribution<double>(mean, stddev)(rng);
  const double rounded = std::round(value);
  if (rounded <= 0.0) return 0;
  return std::min(pool, static_cast<std::size_t>(rounded));
}

// First k entries of a partial Fisher–Yates shuffle of `pool`.
std::vector<Vertex> sample(Rng& rng, std::vector<Vertex> pool, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

std::vector<Vertex> id_range(Vertex first, std::size_t count) {
  std::vector<Vertex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

// Degree draws for all of `vertices`, then neighbor samples, in id order.
void attach(Rng& rng, const std::vector<Vertex>& vertices,
            const std::vector<Vertex>& pool, double density, double cv,
            std::vector<Edge>& edges) {
  const double mean = density * static_cast<double>(pool.size());
  std::vector<std::size_t> degrees;
  degrees.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    degrees.push_back(draw_degree(rng, mean, cv, pool.size()));
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : sample(rng, pool, degrees[i])) {
      edges.push_back({std::min(w, vertices[i]), std::max(w, vertices[i])});
    }
  }
}

double coefficient_of_variation(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (mean == 0.0) return 0.0;
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  return std::sqrt(var) / mean;
}

double ratio(std::size_t num, double den) {
  return den > 0.0 ? static_cast<double>(num) / den : 0.0;
}

}  // namespace

std::pair<Graph, OctDecomposition> generate(const GeneratorParams& p) {
  p.validate();
  Rng rng(p.seed);
  const std::vector<Vertex> left = id_range(0, p.n_l);
  const std::vector<Vertex> right = id_range(p.n_l, p.n_r);
  const std::vector<Vertex> oct = id_range(p.n_l + p.n_r, p.n_o);
  const std::vector<Vertex> bipartite = id_range(0, p.n_l + p.n_r);

  std::vector<Edge> edges;
  attach(rng, right, left, p.d_lr, p.cv_lr, edges);
  attach(rng, oct, bipartite, p.d_cross, p.cv_cross, edges);
  std::bernoulli_distribution coin(p.d_o);
  for (std::size_t i = 0; i < oct.size(); ++i) {
    for (std::size_t j = i + 1; j < oct.size(); ++j) {
      if (coin(rng)) edges.push_back({oct[i], oct[j]});
    }
  }
  std::sort(edges.begin(), edges.end());

  const std::size_t n = p.n_l + p.n_r + p.n_o;
  return {Graph::from_edges(n, edges), OctDecomposition(n, left, right, oct)};
}

DensityReport realized_stats(const Graph& g, const OctDecomposition& d) {
  std::size_t lr = 0, cross = 0, inner = 0;
  std::vector<double> r_degrees;
  std::vector<double> o_degrees;
  for (Vertex v : d.right()) {
    std::size_t deg = 0;
    for (Vertex w : g.neighbors(v)) deg += d.side_of(w) == Side::L;
    r_degrees.push_back(static_cast<double>(deg));
  }
  for (Vertex v : d.oct()) {
    std::size_t deg = 0;
    for (Vertex w : g.neighbors(v)) deg += d.side_of(w) != Side::O;
    o_degrees.push_back(static_cast<double>(deg));
  }
  for (const Edge& e : g.edges()) {
    const Side a = d.side_of(e.u);
    const Side b = d.side_of(e.v);
    if (a == Side::O && b == Side::O) {
      ++inner;
    } else if (a == Side::O || b == Side::O) {
      ++cross;
    } else if (a != b) {
      ++lr;
    }
  }
  const double n_l = static_cast<double>(d.n_left());
  const double n_r = static_cast<double>(d.n_right());
  const double n_o = static_cast<double>(d.n_oct());
  DensityReport report;
  report.d_lr = ratio(lr, n_l * n_r);
  report.d_cross = ratio(cross, n_o * (n_l + n_r));
  report.d_o = ratio(inner, n_o * (n_o - 1.0) / 2.0);
  report.cv_lr = coefficient_of_variation(r_degrees);
  report.cv_cross = coefficient_of_variation(o_degrees);
  return report;
}

}  // namespace octbic
