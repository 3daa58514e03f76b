#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/graph.hpp"

namespace ifam {

// The subspace W of all complete bipartite graphs B(S) has dimension n-1;
// {B({i}) : 1 <= i <= n-1} is a basis.  Each coset of W contains exactly one
// graph in which vertex n is isolated, and canonical_rep pivots down to it.

/// The unique member of G's W-coset whose vertex n is isolated.
Graph canonical_rep(const Graph& g);

// Identifies a coset of W by its canonical representative: two graphs share a
// CosetId exactly when their XOR lies in W.
struct CosetId {
  int n = 1;
  Graph rep;  // no edge touches vertex n

  static CosetId of(const Graph& g) { return {g.n(), canonical_rep(g)}; }
  friend bool operator==(const CosetId&, const CosetId&) = default;
};

struct CosetIdHash {
  std::size_t operator()(const CosetId& id) const { return GraphHash{}(id.rep); }
};

/// All 2^{n-1} distinct elements of W, in increasing bit-vector order.
/// Capacity error for n > 20.
std::vector<Graph> subspace_w(int n);

/// Membership test for W (empty graph counts: it is B(empty)).
bool in_subspace_w(const Graph& g);

/// If g is a nonempty complete bipartite graph B(S), returns the side of the
/// cut not containing vertex 1; otherwise nothing.
std::optional<VertexSet> crossing_cut(const Graph& g);

struct AnticlusterReport {
  std::size_t family_size = 0;
  std::size_t cosets_hit = 0;
  std::vector<std::pair<Graph, Graph>> violations;  // same-coset pairs
  mpz_class bound_num;  // 2^{n(n-1)/2}
  mpz_class bound_den;  // 2^{n-1}

  /// With no violations, |family| <= bound_num/bound_den is certified.
  bool certified() const { return violations.empty(); }
};

/// Groups the family by canonical coset representative and reports every
/// coset hit more than once, together with the coset-counting bound.
AnticlusterReport verify_anticluster(const Family& f);

/// For distinct graphs whose XOR is a nonempty element of W, returns the cut
/// side S (vertex 1 excluded) witnessing that intersect(g1,g2) has no edge
/// across the cut, hence is disconnected.  Returns nothing when the XOR is
/// outside W.  Throws when g1 == g2.
std::optional<VertexSet> disconnection_witness(const Graph& g1, const Graph& g2);

}  // namespace ifam
