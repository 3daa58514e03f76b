#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ifam/graph.hpp"
#include "ifam/properties.hpp"

using namespace ifam;

namespace {

// Independent oracle: the lexicographic pair list, built the slow way.
std::vector<std::pair<int, int>> lex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 0; i < g.bit_length(); ++i)
    if (rng() & 1) g.set_bit(i);
  return g;
}

}  // namespace

TEST_CASE("edge_index matches brute lexicographic enumeration") {
  for (int n = 2; n <= 8; ++n) {
    auto pairs = lex_pairs(n);
    REQUIRE(static_cast<int>(pairs.size()) == edge_slots(n));
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
      CHECK(edge_index(pairs[k].first, pairs[k].second, n) == k);
      CHECK(edge_endpoints(k, n) == pairs[k]);
    }
  }
  CHECK(edge_index(1, 2, 4) == 0);
  CHECK(edge_index(3, 4, 4) == 5);
  // The lex list for n=5 runs (1,2),(1,3),(1,4),(1,5),(2,3),(2,4),... so
  // (2,4) sits at position 5 counting from zero.
  CHECK(edge_index(2, 4, 5) == 5);
}

TEST_CASE("edge_index rejects bad arguments") {
  CHECK_THROWS_AS(edge_index(2, 2, 4), ArgumentError);
  CHECK_THROWS_AS(edge_index(3, 2, 4), ArgumentError);
  CHECK_THROWS_AS(edge_index(0, 1, 4), ArgumentError);
  CHECK_THROWS_AS(edge_index(1, 5, 4), ArgumentError);
}

TEST_CASE("xor is the GF(2) group operation") {
  Graph path = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK((path ^ path) == Graph::empty(4));
  CHECK((path ^ Graph::empty(4)) == path);
  CHECK_THROWS_AS(path ^ Graph::empty(5), ArgumentError);

  Graph b1 = bipartite_complete(4, VertexSet::of(4, {1}));
  Graph b2 = bipartite_complete(4, VertexSet::of(4, {2}));
  Graph b12 = bipartite_complete(4, VertexSet::of(4, {1, 2}));
  CHECK((b1 ^ b2) == b12);
}

TEST_CASE("group laws exhaustively at small n, randomized at n=8") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<Graph> all;
    for_each_graph(n, [&](const Graph& g) { all.push_back(g); });
    for (const Graph& g : all) {
      CHECK((g ^ g).is_empty());
      for (const Graph& h : all) CHECK((g ^ h) == (h ^ g));
    }
  }
  std::mt19937_64 rng(20260808);
  for (int trial = 0; trial < 2000; ++trial) {
    Graph g = random_graph(8, rng), h = random_graph(8, rng), k = random_graph(8, rng);
    CHECK((g ^ h) == (h ^ g));
    CHECK((g ^ g).is_empty());
    CHECK(((g ^ h) ^ k) == (g ^ (h ^ k)));
  }
}

TEST_CASE("intersect is bitwise AND") {
  Graph path = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  Graph star2 = Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}});
  CHECK((path & path) == path);
  CHECK((path & complement(path)).is_empty());
  // Per-edge AND done by hand: common edges are (1,2) and (2,3).
  CHECK((path & star2) == Graph::from_edges(4, {{1, 2}, {2, 3}}));
  CHECK_THROWS_AS(path & Graph::empty(3), ArgumentError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(6, rng), h = random_graph(6, rng);
    Graph meet = g & h;
    for (int i = 0; i < meet.bit_length(); ++i)
      CHECK(meet.test(i) == (g.test(i) && h.test(i)));
  }
}

TEST_CASE("complement flips every edge") {
  CHECK(complement(Graph::empty(5)) == Graph::complete(5));
  Graph b1 = bipartite_complete(4, VertexSet::of(4, {1}));
  CHECK(complement(complement(b1)) == b1);
  // Complement of B({1}) on 4 vertices: the triangle on {2,3,4}.
  CHECK(complement(b1) == Graph::from_edges(4, {{2, 3}, {2, 4}, {3, 4}}));
}

TEST_CASE("bipartite_complete basics") {
  CHECK(bipartite_complete(4, VertexSet(4)).is_empty());
  CHECK(bipartite_complete(4, VertexSet::of(4, {1})) ==
        Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}));

  // B(S) = B(S complement), exhaustively at n=5.
  int n = 5;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s(n);
    for (int v = 1; v <= n; ++v)
      if ((mask >> (v - 1)) & 1) s.add(v);
    CHECK(bipartite_complete(n, s) == bipartite_complete(n, s.complement()));
  }
}

TEST_CASE("B(S) xor B(T) = B(S symmetric-difference T), exhaustive n=5") {
  int n = 5;
  std::vector<VertexSet> sets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s(n);
    for (int v = 1; v <= n; ++v)
      if ((mask >> (v - 1)) & 1) s.add(v);
    sets.push_back(s);
  }
  for (const auto& s : sets)
    for (const auto& t : sets)
      CHECK((bipartite_complete(n, s) ^ bipartite_complete(n, t)) ==
            bipartite_complete(n, s ^ t));
}

TEST_CASE("the set of complete bipartite graphs has size 2^{n-1}") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::uint64_t> distinct;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet s(n);
      for (int v = 1; v <= n; ++v)
        if ((mask >> (v - 1)) & 1) s.add(v);
      distinct.insert(bipartite_complete(n, s).low_bits());
    }
    CHECK(distinct.size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("intersection lies inside the complement of the xor") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 400; ++trial) {
      Graph g = random_graph(n, rng), h = random_graph(n, rng);
      CHECK(is_subgraph(g & h, complement(g ^ h)));
    }
  }
}

TEST_CASE("complement of a proper complete bipartite graph is disconnected") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n) - 1; ++mask) {
      VertexSet s(n);
      for (int v = 1; v <= n; ++v)
        if ((mask >> (v - 1)) & 1) s.add(v);
      if (s.empty() || s.full()) continue;
      CHECK_FALSE(satisfies(complement(bipartite_complete(n, s)),
                            PropertySpec::connected()));
    }
  }
}

TEST_CASE("is_subgraph") {
  Graph k4 = Graph::complete(4);
  Graph b1 = bipartite_complete(4, VertexSet::of(4, {1}));
  CHECK(is_subgraph(Graph::empty(4), k4));
  CHECK(is_subgraph(k4, k4));
  CHECK(is_subgraph(b1, k4));
  CHECK_FALSE(is_subgraph(k4, b1));
  CHECK_THROWS_AS(is_subgraph(Graph::empty(3), k4), ArgumentError);
}

TEST_CASE("enumeration yields the whole space in bit order") {
  std::vector<Graph> all;
  for_each_graph(3, [&](const Graph& g) { all.push_back(g); });
  REQUIRE(all.size() == 8);
  CHECK(all.front().is_empty());
  CHECK(all.back() == Graph::complete(3));
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const Graph& a, const Graph& b) { return a < b; }));

  std::size_t count4 = 0;
  for_each_graph(4, [&](const Graph&) { ++count4; });
  CHECK(count4 == 64);

  CHECK_THROWS_AS(for_each_graph(9, [](const Graph&) {}), CapacityError);
  CHECK(graph_space_size(4) == 64);
}

TEST_CASE("encode/decode round trip and failure modes") {
  CHECK(encode(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})) == "n=4;29");
  CHECK(encode(Graph::empty(4)) == "n=4;00");
  CHECK(encode(Graph::complete(4)) == "n=4;3f");
  CHECK(encode(Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})) == "n=5;291");

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, rng);
    CHECK(decode(encode(g)) == g);
  }

  CHECK_THROWS_AS(decode("4;29"), ArgumentError);
  CHECK_THROWS_AS(decode("n=4;2"), ArgumentError);      // wrong digit count
  CHECK_THROWS_AS(decode("n=4;zz"), ArgumentError);     // bad hex
  CHECK_THROWS_AS(decode("n=4;ff"), ArgumentError);     // bits beyond the space
  CHECK_THROWS_AS(decode("n=0;"), ArgumentError);
  CHECK_THROWS_AS(decode("n=x;00"), ArgumentError);
}

TEST_CASE("vertex set helpers") {
  VertexSet s = VertexSet::of(4, {2, 4});
  CHECK(s.to_string() == "{2,4}");
  CHECK(s.complement() == VertexSet::of(4, {1, 3}));
  CHECK((s ^ VertexSet::of(4, {4})) == VertexSet::of(4, {2}));
  CHECK_THROWS_AS(VertexSet::of(4, {5}), ArgumentError);
  CHECK(VertexSet(4).empty());
  CHECK(VertexSet::of(4, {1, 2, 3, 4}).full());
}
