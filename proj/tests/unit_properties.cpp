#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ifam/graph.hpp"
#include "ifam/properties.hpp"

using namespace ifam;

namespace {

// Reachability oracle on an adjacency-list representation, kept independent
// of the bitmask implementation under test.
bool oracle_connected(const Graph& g) {
  int n = g.n();
  std::vector<std::vector<int>> adj(n + 1);
  g.for_each_edge([&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  });
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  return visited == n;
}

// Containment oracle: try every injective map of the pattern's non-isolated
// vertices into the host, by brute enumeration.
bool oracle_contains(const Graph& g, const Graph& pattern) {
  std::vector<int> support;
  for (int v = 1; v <= pattern.n(); ++v)
    if (pattern.degree(v) > 0) support.push_back(v);
  if (support.empty()) return true;
  int k = static_cast<int>(support.size());
  if (k > g.n()) return false;
  std::vector<int> hosts(g.n());
  std::iota(hosts.begin(), hosts.end(), 1);
  std::vector<int> chosen(k);
  std::vector<bool> used(g.n() + 1, false);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (pattern.has_edge(std::min(support[i], support[j]),
                               std::max(support[i], support[j])) &&
              !g.has_edge(std::min(chosen[i], chosen[j]), std::max(chosen[i], chosen[j])))
            return false;
      return true;
    }
    for (int h : hosts) {
      if (used[h]) continue;
      used[h] = true;
      chosen[depth] = h;
      if (self(self, depth + 1)) {
        used[h] = false;
        return true;
      }
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// Hamiltonicity oracle over all cyclic vertex orders.
bool oracle_hamiltonian(const Graph& g) {
  int n = g.n();
  if (n == 1) return true;
  if (n == 2) return false;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 2);
  do {
    bool ok = g.has_edge(1, perm.front()) && g.has_edge(std::min(1, perm.back()), std::max(1, perm.back()));
    for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
      ok = g.has_edge(std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1]));
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Colorability oracle over all r^n assignments.
bool oracle_colorable(const Graph& g, int r) {
  int n = g.n();
  std::vector<int> color(n, 0);
  while (true) {
    bool ok = true;
    for (int u = 1; ok && u <= n; ++u)
      for (int v = u + 1; ok && v <= n; ++v)
        if (g.has_edge(u, v) && color[u - 1] == color[v - 1]) ok = false;
    if (ok) return true;
    int i = 0;
    while (i < n && color[i] == r - 1) color[i++] = 0;
    if (i == n) return false;
    ++color[i];
  }
}

// Perfect matching oracle: greedy recursion over all pairings.
bool oracle_matching(const Graph& g) {
  int n = g.n();
  if (n % 2 != 0) return false;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> bool {
    int u = 0;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) {
        u = v;
        break;
      }
    if (u == 0) return true;
    used[u] = true;
    for (int v = u + 1; v <= n; ++v) {
      if (used[v] || !g.has_edge(u, v)) continue;
      used[v] = true;
      if (self(self)) {
        used[v] = used[u] = false;
        return true;
      }
      used[v] = false;
    }
    used[u] = false;
    return false;
  };
  return rec(rec);
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 0; i < g.bit_length(); ++i)
    if (rng() & 1) g.set_bit(i);
  return g;
}

}  // namespace

TEST_CASE("connectivity basics and degenerate cases") {
  CHECK(satisfies(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}), PropertySpec::connected()));
  // Triangle on {1,2,3} leaves vertex 4 isolated.
  CHECK_FALSE(satisfies(Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}}),
                        PropertySpec::connected()));
  CHECK(is_connected(Graph::empty(1)));
  CHECK_FALSE(is_connected(Graph::empty(2)));
}

TEST_CASE("connectivity agrees with the reachability oracle on all n<=4 graphs") {
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph& g) { CHECK(is_connected(g) == oracle_connected(g)); });
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 9), rng);
    CHECK(is_connected(g) == oracle_connected(g));
  }
}

TEST_CASE("pattern containment: triangles on three vertices") {
  Graph triangle = Graph::complete(3);
  int containing = 0;
  for_each_graph(3, [&](const Graph& g) {
    bool has = contains_pattern(g, triangle);
    CHECK(has == (g == triangle));
    if (has) ++containing;
  });
  CHECK(containing == 1);
}

TEST_CASE("pattern containment agrees with the injective-map oracle") {
  std::vector<Graph> patterns = {
      Graph::complete(3),                                     // triangle
      Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}),         // path with 3 edges
      Graph::from_edges(4, {{1, 2}, {3, 4}}),                 // 2-edge matching
      Graph::from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}), // 4-star
      Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), // 4-cycle
  };
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      for (const Graph& pat : patterns)
        CHECK(contains_pattern(g, pat) == oracle_contains(g, pat));
    });
  }
}

TEST_CASE("pattern containment ignores isolated pattern vertices") {
  Graph padded_triangle(5);
  padded_triangle.set_edge(1, 2).set_edge(1, 3).set_edge(2, 3);
  CHECK(contains_pattern(Graph::complete(3), padded_triangle));
  CHECK(contains_pattern(Graph::complete(4), Graph::empty(9)));
}

TEST_CASE("r-partiteness via exact colorability") {
  Graph c5 = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK(satisfies(c5, PropertySpec::not_bipartite()));
  CHECK_FALSE(satisfies(c5, PropertySpec::not_r_partite(3)));
  Graph k4 = Graph::complete(4);
  CHECK(satisfies(k4, PropertySpec::not_r_partite(3)));
  CHECK_FALSE(satisfies(k4, PropertySpec::not_r_partite(4)));
  // r >= n: every graph on n vertices is r-colorable.
  CHECK_FALSE(satisfies(k4, PropertySpec::not_r_partite(7)));

  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph& g) {
      for (int r = 1; r <= 4; ++r) CHECK(is_r_colorable(g, r) == oracle_colorable(g, r));
    });
}

TEST_CASE("hamiltonicity DP agrees with the permutation oracle") {
  CHECK(satisfies(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
                  PropertySpec::hamiltonian()));
  CHECK_FALSE(satisfies(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}),
                        PropertySpec::hamiltonian()));
  CHECK(satisfies(Graph::complete(3), PropertySpec::hamiltonian()));
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph& g) { CHECK(is_hamiltonian(g) == oracle_hamiltonian(g)); });
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(6, rng);
    CHECK(is_hamiltonian(g) == oracle_hamiltonian(g));
  }
}

TEST_CASE("isolated vertices and minimum edges") {
  CHECK(satisfies(Graph::from_edges(4, {{1, 2}, {3, 4}}), PropertySpec::no_isolated_vertex()));
  CHECK_FALSE(satisfies(Graph::from_edges(4, {{1, 2}, {2, 3}}),
                        PropertySpec::no_isolated_vertex()));
  CHECK_FALSE(satisfies(Graph::empty(1), PropertySpec::no_isolated_vertex()));
  CHECK(satisfies(Graph::complete(4), PropertySpec::min_edges(6)));
  CHECK_FALSE(satisfies(Graph::complete(4), PropertySpec::min_edges(7)));
  CHECK(satisfies(Graph::empty(3), PropertySpec::min_edges(0)));
}

TEST_CASE("perfect matching DP agrees with the pairing oracle") {
  CHECK(satisfies(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}),
                  PropertySpec::perfect_matching()));
  CHECK_FALSE(satisfies(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}),
                        PropertySpec::perfect_matching()));
  CHECK_FALSE(satisfies(Graph::complete(5), PropertySpec::perfect_matching()));
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph& g) {
      CHECK(has_perfect_matching(g) == oracle_matching(g));
    });
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(6, rng);
    CHECK(has_perfect_matching(g) == oracle_matching(g));
  }
}

TEST_CASE("malformed property specs are rejected") {
  PropertySpec broken;
  broken.kind = PropertyKind::ContainsPattern;  // pattern missing
  CHECK_THROWS_AS(satisfies(Graph::empty(3), broken), ArgumentError);
  broken = PropertySpec::connected();
  broken.r = 2;  // stray parameter
  CHECK_THROWS_AS(satisfies(Graph::empty(3), broken), ArgumentError);
  CHECK_THROWS_AS(PropertySpec::not_r_partite(0), ArgumentError);
  CHECK_THROWS_AS(PropertySpec::min_edges(-1), ArgumentError);
}

TEST_CASE("property descriptions are stable") {
  CHECK(PropertySpec::connected().describe() == "connected");
  CHECK(PropertySpec::not_r_partite(3).describe() == "not-3-partite");
  CHECK(PropertySpec::contains(Graph::complete(3)).describe() == "contains(n=3;7)");
}
