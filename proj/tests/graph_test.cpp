#include <gtest/gtest.h>

#include <random>

#include "octbic/biclique.hpp"
#include "octbic/decomposition.hpp"
#include "octbic/graph.hpp"
#include "test_graphs.hpp"

namespace octbic {
namespace {

using testing::cycle;
using testing::make_graph;

TEST(LoadGraph, PathOnThreeVertices) {
  const Graph g = load_graph("3 2\n0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  const auto n1 = g.neighbors(1);
  EXPECT_EQ(VertexSet(n1.begin(), n1.end()), (VertexSet{0, 2}));
}

TEST(LoadGraph, CycleDegrees) {
  const Graph g = load_graph("4 4\n0 1\n1 2\n2 3\n3 0");
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(LoadGraph, CommentsAndBlankLines) {
  const Graph g = load_graph("# a comment\n\n2 1\n# another\n0 1\n");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));

  const Graph t = load_graph("3 2   # n m\r\n0 1 # first\r\n1 2\r\n");
  EXPECT_EQ(t.num_edges(), 2u);
  EXPECT_EQ(load_decomposition("L: 0 # left\nR: 1\nO: 2\n", 3).left(), VertexSet{0});
}

TEST(LoadGraph, RejectsBadInput) {
  EXPECT_THROW(load_graph("2 1\n0 0"), InputError);          // self-loop
  EXPECT_THROW(load_graph("3 2\n0 1\n1 0"), InputError);     // duplicate
  EXPECT_THROW(load_graph("2 1\n0 2"), InputError);          // id >= n
  EXPECT_THROW(load_graph("3 1\n0 x"), InputError);          // malformed
  EXPECT_THROW(load_graph("3 2\n0 1"), InputError);          // count mismatch
  EXPECT_THROW(load_graph("3\n"), InputError);               // header
  EXPECT_THROW(load_graph(""), InputError);
  EXPECT_THROW(load_graph("3 1\n0 1 2"), InputError);
}

TEST(LoadGraph, RoundTripNormalizes) {
  const Graph g = load_graph("# c\n4 3\n2 1\n3 0\n0 1\n");
  EXPECT_EQ(serialize_graph(g), "4 3\n0 1\n0 3\n1 2\n");
  EXPECT_EQ(serialize_graph(load_graph(serialize_graph(g))), serialize_graph(g));
}

TEST(Graph, RepresentationsAgreeOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::erdos_renyi(30, 0.2, rng);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto sorted = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(sorted.begin(), sorted.end()));
      EXPECT_EQ(sorted.size(), g.neighbor_index(v).size());
      for (Vertex w : sorted) {
        EXPECT_TRUE(g.neighbor_index(v).contains(w));
        EXPECT_TRUE(g.adjacent(w, v));
        EXPECT_NE(w, v);
      }
      degree_sum += sorted.size();
    }
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
  }
}

TEST(InducedSubgraph, Examples) {
  const Graph c5 = cycle(5);
  const VertexSet three{0, 1, 2};
  const Subgraph p3 = induced_subgraph(c5, three);
  EXPECT_EQ(p3.graph.num_vertices(), 3u);
  EXPECT_EQ(p3.graph.num_edges(), 2u);
  EXPECT_EQ(p3.to_original, three);

  const VertexSet all{0, 1, 2, 3, 4};
  EXPECT_EQ(serialize_graph(induced_subgraph(c5, all).graph), serialize_graph(c5));

  const VertexSet opposite{0, 2};
  const Subgraph two = induced_subgraph(cycle(4), opposite);
  EXPECT_EQ(two.graph.num_vertices(), 2u);
  EXPECT_EQ(two.graph.num_edges(), 0u);

  const VertexSet bad{0, 9};
  EXPECT_THROW(induced_subgraph(c5, bad), std::out_of_range);
}

TEST(InducedSubgraph, MappingRecoversEdges) {
  const Graph g = make_graph(6, {{0, 3}, {3, 5}, {1, 2}, {2, 5}, {0, 5}});
  const VertexSet s{0, 3, 5};
  const Subgraph sub = induced_subgraph(g, s);
  EXPECT_EQ(sub.graph.num_edges(), 3u);
  for (const Edge& e : sub.graph.edges()) {
    EXPECT_TRUE(g.adjacent(sub.to_original[e.u], sub.to_original[e.v]));
  }
}

TEST(ValidateOct, Examples) {
  const Graph c4 = cycle(4);
  EXPECT_TRUE(validate_oct(c4, OctDecomposition(4, {0, 2}, {1, 3}, {})).ok);

  const Graph k3 = testing::complete(3);
  EXPECT_TRUE(validate_oct(k3, OctDecomposition(3, {0}, {1}, {2})).ok);

  const auto bad = validate_oct(k3, OctDecomposition(3, {0, 1}, {2}, {}));
  EXPECT_FALSE(bad.ok);
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0], (Edge{0, 1}));
}

TEST(OctDecomposition, RejectsBadPartitions) {
  EXPECT_THROW(OctDecomposition(3, {0, 1}, {1}, {2}), InputError);  // overlap
  EXPECT_THROW(OctDecomposition(3, {0}, {1}, {}), InputError);      // uncovered
  EXPECT_THROW(OctDecomposition(3, {0}, {1}, {5}), InputError);     // range
  EXPECT_THROW(validate_oct(testing::complete(4), OctDecomposition(3, {0}, {1}, {2})),
               InputError);
}

TEST(OctDecomposition, TextFormat) {
  const auto d = load_decomposition("# dec\nL: 0 2\nR: 1 3\nO:\n", 4);
  EXPECT_EQ(d.left(), (VertexSet{0, 2}));
  EXPECT_EQ(d.right(), (VertexSet{1, 3}));
  EXPECT_TRUE(d.oct().empty());
  EXPECT_EQ(d.side_of(3), Side::R);
  EXPECT_EQ(serialize_decomposition(d), "L: 0 2\nR: 1 3\nO:\n");
  EXPECT_THROW(load_decomposition("L: 0\nR: 1\n", 2), InputError);
  EXPECT_THROW(load_decomposition("L: 0\nX: 1\nO:\n", 2), InputError);
  EXPECT_THROW(load_decomposition("L: 0\nL: 1\nO:\n", 2), InputError);
}

TEST(Biclique, CanonicalEquality) {
  const Biclique a({3, 1}, {0, 2});
  const Biclique b({0, 2}, {1, 3});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.key(), b.key());
  EXPECT_EQ(a.key(), "0,2|1,3");
  EXPECT_FALSE(a.is_canonical());
  EXPECT_TRUE(a.canonical().is_canonical());
  EXPECT_FALSE(a < b);
  EXPECT_FALSE(b < a);
}

TEST(Biclique, SwapInvariantOnRandomSides) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Vertex> pick(0, 20);
  for (int i = 0; i < 200; ++i) {
    VertexSet x, y;
    for (int k = 0; k < 4; ++k) x.push_back(pick(rng));
    for (int k = 0; k < 4; ++k) y.push_back(pick(rng) + 21);
    const Biclique b(x, y);
    EXPECT_EQ(b, b.swapped());
    EXPECT_EQ(b.key(), b.swapped().key());
    EXPECT_EQ(b.canonical().x(), b.swapped().canonical().x());
  }
}

TEST(BicliqueStore, RejectsDuplicates) {
  for (bool materialize : {true, false}) {
    BicliqueStore store(materialize);
    EXPECT_TRUE(store.insert(Biclique({0}, {1, 2})));
    EXPECT_FALSE(store.insert(Biclique({1, 2}, {0})));
    EXPECT_FALSE(store.insert(Biclique({0}, {1, 2})));
    EXPECT_TRUE(store.insert(Biclique({1}, {2})));
    EXPECT_EQ(store.size(), 2u);
    EXPECT_TRUE(store.contains(Biclique({2}, {1})));
    EXPECT_EQ(store.items().size(), materialize ? 2u : 0u);
  }
}

TEST(BicliqueStore, KeepsSortedOrder) {
  BicliqueStore store;
  store.insert(Biclique({2}, {3}));
  store.insert(Biclique({1}, {0}));
  store.insert(Biclique({0, 4}, {1}));
  std::vector<std::string> keys;
  for (const auto& b : store) keys.push_back(b.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"0|1", "0,4|1", "2|3"}));
}

TEST(BicliquePredicates, InducedAndPlain) {
  const Graph k3 = testing::complete(3);
  EXPECT_TRUE(is_biclique(k3, Biclique({0}, {1, 2})));
  EXPECT_FALSE(is_induced_biclique(k3, Biclique({0}, {1, 2})));
  EXPECT_TRUE(is_induced_biclique(k3, Biclique({0}, {1})));
  EXPECT_FALSE(is_biclique(k3, Biclique({0}, {0, 1})));
  EXPECT_FALSE(is_biclique(k3, Biclique({}, {1})));
  EXPECT_EQ(format_biclique(k3, Biclique({1, 2}, {0})), "0 | 1,2");
}

}  // namespace
}  // namespace octbic
