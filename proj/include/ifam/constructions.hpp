#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/graph.hpp"

namespace ifam {

/// All labeled supergraphs of h on n vertices; |result| = 2^{slots - |E(h)|}.
Family star_family(int n, const Graph& h);

// Two vertex-disjoint trees A and B whose supports partition {1..n}, plus an
// odd set S of crossing edges.  The family takes every graph containing
// A and B together with at least half (a strict majority) of S.
struct TreePairSpec {
  Graph a;
  Graph b;
  std::vector<std::pair<int, int>> s;

  int n() const { return a.n(); }
  /// Throws ArgumentError naming the violated condition.
  void validate() const;
  VertexSet support_a() const;
  VertexSet support_b() const;
};

Family treepair_family(const TreePairSpec& spec);

/// Iterated variant: the requirement "contains A" is replaced by "the
/// restriction to A's support (relabeled order-preservingly to {1..k}) is a
/// member of inner".  The caller re-verifies the result; nothing here
/// guarantees the output is connected-intersecting for an arbitrary inner.
Family iterate_treepair(const TreePairSpec& spec, const Family& inner);

/// On four vertices: the 4-cycle 1-2-3-4 plus every graph with at least five
/// edges.  A maximum connected-intersecting family that is not a star family.
Family exceptional_n4();

/// t vertex-disjoint copies of gamma; copy i occupies vertices
/// {(i-1)*gamma.n + 1 .. i*gamma.n}.
Graph union_pattern(const Graph& gamma, int t);

/// Block i of a graph on b*block_size vertices, relabeled down to {1..block_size}.
Graph block_subgraph(const Graph& g, int block, int block_size);

/// Membership predicate for the tensored family F(a,b): at least a of the b
/// contiguous blocks of g induce a member of f.  Works at any graph size.
bool tensor_member(const Family& f, int a, int b, const Graph& g);

/// Materializes F(a,b).  Desk scale only; capacity error when the ambient
/// graph space is too large to enumerate.
Family tensor_family(const Family& f, int a, int b);

// Density of F(a,b) by exhaustive enumeration of block-content patterns.
// Edges between blocks (and non-qualifying freedom) cancel exactly, so the
// density equals qualifying_patterns / pattern_space.
struct TensorDensity {
  mpz_class qualifying_patterns;
  mpz_class pattern_space;  // (2^{slots(f.n)})^b
  mpq_class density;        // canonicalized quotient
};

TensorDensity tensor_density(const Family& f, int a, int b);

}  // namespace ifam
