#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ifam/constructions.hpp"
#include "ifam/cosets.hpp"
#include "ifam/properties.hpp"

using namespace ifam;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 0; i < g.bit_length(); ++i)
    if (rng() & 1) g.set_bit(i);
  return g;
}

VertexSet random_subset(int n, std::mt19937_64& rng) {
  VertexSet s(n);
  for (int v = 1; v <= n; ++v)
    if (rng() & 1) s.add(v);
  return s;
}

// Direct W-membership oracle: compare against the enumerated subspace.
bool oracle_in_w(const Graph& g, const std::vector<Graph>& w) {
  return std::binary_search(w.begin(), w.end(), g);
}

}  // namespace

TEST_CASE("coset ids agree with xor membership in W") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(6, rng), h = random_graph(6, rng);
    CHECK((CosetId::of(g) == CosetId::of(h)) == in_subspace_w(g ^ h));
    CHECK(CosetId::of(g).rep == canonical_rep(g));
  }
}

TEST_CASE("canonical_rep collapses W to the empty graph") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& b : subspace_w(n)) CHECK(canonical_rep(b).is_empty());
}

TEST_CASE("canonical_rep is constant on cosets and isolates vertex n") {
  std::mt19937_64 rng(123);
  int n = 6;
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(n, rng);
    Graph b = bipartite_complete(n, random_subset(n, rng));
    CHECK(canonical_rep(g) == canonical_rep(g ^ b));
    Graph rep = canonical_rep(g);
    for (int i = 1; i < n; ++i) CHECK_FALSE(rep.has_edge(i, n));
    CHECK(in_subspace_w(rep ^ g));
  }
}

TEST_CASE("canonical_rep takes exactly 2^{slots-(n-1)} values at n<=4") {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::uint64_t> reps;
    for_each_graph(n, [&](const Graph& g) { reps.insert(canonical_rep(g).low_bits()); });
    CHECK(reps.size() == (std::size_t{1} << (edge_slots(n) - (n - 1))));
  }
}

TEST_CASE("same canonical rep iff xor lies in W") {
  int n = 4;
  auto w = subspace_w(n);
  std::vector<Graph> all;
  for_each_graph(n, [&](const Graph& g) { all.push_back(g); });
  for (const Graph& g : all)
    for (const Graph& h : all)
      CHECK((canonical_rep(g) == canonical_rep(h)) == oracle_in_w(g ^ h, w));

  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(8, rng), h = random_graph(8, rng);
    CHECK((canonical_rep(g) == canonical_rep(h)) == in_subspace_w(g ^ h));
  }
}

TEST_CASE("subspace_w enumerates W") {
  auto w2 = subspace_w(2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0].is_empty());
  CHECK(w2[1] == Graph::complete(2));

  CHECK(subspace_w(4).size() == 8);

  auto w5 = subspace_w(5);
  CHECK(std::is_sorted(w5.begin(), w5.end()));
  for (const Graph& a : w5)
    for (const Graph& b : w5) CHECK(oracle_in_w(a ^ b, w5));  // closure under xor

  CHECK_THROWS_AS(subspace_w(21), CapacityError);
}

TEST_CASE("in_subspace_w recognizes exactly the complete bipartite graphs") {
  int n = 5;
  auto w = subspace_w(n);
  for_each_graph(n, [&](const Graph& g) { CHECK(in_subspace_w(g) == oracle_in_w(g, w)); });
}

TEST_CASE("verify_anticluster on the spanning-path star family") {
  Graph path = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  auto report = verify_anticluster(star_family(4, path));
  CHECK(report.family_size == 8);
  CHECK(report.cosets_hit == 8);
  CHECK(report.violations.empty());
  CHECK(report.certified());
  CHECK(report.bound_num == 64);
  CHECK(report.bound_den == 8);
}

TEST_CASE("verify_anticluster flags same-coset pairs") {
  std::mt19937_64 rng(55);
  Graph g = random_graph(6, rng);
  Family f(6);
  f.insert(g);
  f.insert(g ^ bipartite_complete(6, VertexSet::of(6, {1})));
  auto report = verify_anticluster(f);
  CHECK(report.family_size == 2);
  CHECK(report.cosets_hit == 1);
  REQUIRE(report.violations.size() == 1);
  CHECK_FALSE(report.certified());
  CHECK(report.family_size == report.cosets_hit + report.violations.size());
}

TEST_CASE("verify_anticluster certifies the exceptional family") {
  auto report = verify_anticluster(exceptional_n4());
  CHECK(report.family_size == 8);
  CHECK(report.cosets_hit == 8);
  CHECK(report.violations.empty());
}

TEST_CASE("disconnection witness for same-coset pairs") {
  Graph star1 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  Graph other = star1 ^ bipartite_complete(4, VertexSet::of(4, {2}));
  auto witness = disconnection_witness(star1, other);
  REQUIRE(witness.has_value());
  CHECK(*witness == VertexSet::of(4, {2}));
  // No intersection edge crosses the returned cut.
  Graph meet = star1 & other;
  meet.for_each_edge([&](int u, int v) { CHECK(witness->contains(u) == witness->contains(v)); });

  // XOR outside W yields nothing.
  Graph p = Graph::from_edges(4, {{1, 2}});
  Graph q = Graph::from_edges(4, {{1, 2}, {2, 3}});
  CHECK((p ^ q) == Graph::from_edges(4, {{2, 3}}));
  CHECK_FALSE(disconnection_witness(p, q).has_value());

  CHECK_THROWS_AS(disconnection_witness(p, p), ArgumentError);
}

TEST_CASE("every witnessed pair has a disconnected intersection") {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      Graph g = random_graph(n, rng);
      Graph b = bipartite_complete(n, random_subset(n, rng));
      if (b.is_empty()) continue;
      Graph h = g ^ b;
      auto witness = disconnection_witness(g, h);
      REQUIRE(witness.has_value());
      CHECK_FALSE(witness->contains(1));
      CHECK_FALSE(satisfies(g & h, PropertySpec::connected()));
    }
  }
}

TEST_CASE("same-coset distinct pairs never have connected intersections, n=4") {
  // Group all 64 graphs by canonical representative and check all pairs.
  std::vector<std::vector<Graph>> cosets;
  std::vector<Graph> reps;
  for_each_graph(4, [&](const Graph& g) {
    Graph rep = canonical_rep(g);
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (reps[i] == rep) {
        cosets[i].push_back(g);
        return;
      }
    reps.push_back(rep);
    cosets.push_back({g});
  });
  REQUIRE(cosets.size() == 8);
  for (const auto& coset : cosets) {
    REQUIRE(coset.size() == 8);
    for (std::size_t i = 0; i < coset.size(); ++i)
      for (std::size_t j = i + 1; j < coset.size(); ++j)
        CHECK_FALSE(satisfies(coset[i] & coset[j], PropertySpec::connected()));
  }
}
