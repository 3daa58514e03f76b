#pragma once

#include <optional>
#include <string>

#include "ifam/graph.hpp"

namespace ifam {

enum class PropertyKind {
  Connected,
  ContainsPattern,
  NotBipartite,
  NotRPartite,
  Hamiltonian,
  NoIsolatedVertex,
  ContainsPerfectMatching,
  MinEdges,
};

// Closed description of a graph property.  Build through the factories; a
// hand-assembled spec is validated on use.
struct PropertySpec {
  PropertyKind kind = PropertyKind::Connected;
  std::optional<Graph> pattern;  // ContainsPattern only
  std::optional<int> r;          // NotRPartite only
  std::optional<int> m;          // MinEdges only

  static PropertySpec connected();
  static PropertySpec contains(Graph pattern);
  static PropertySpec not_bipartite();
  static PropertySpec not_r_partite(int r);
  static PropertySpec hamiltonian();
  static PropertySpec no_isolated_vertex();
  static PropertySpec perfect_matching();
  static PropertySpec min_edges(int m);

  void validate() const;  // throws ArgumentError when malformed
  std::string describe() const;

  friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

/// Whether g has the property.  Connected means connected on all n labeled
/// vertices: the empty graph is connected for n=1 and disconnected for n>=2.
bool satisfies(const Graph& g, const PropertySpec& p);

// Individual predicates, exposed for direct use and oracle testing.

bool is_connected(const Graph& g);

/// Labeled-copy containment up to an injective vertex map: some injection of
/// the pattern's non-isolated vertices into {1..g.n} carries every pattern
/// edge to an edge of g.  Isolated pattern vertices are ignored.
bool contains_pattern(const Graph& g, const Graph& pattern);

/// Exact r-colorability by backtracking.
bool is_r_colorable(const Graph& g, int r);

/// Hamiltonian cycle existence via subset dynamic programming (n <= 20).
/// The one-vertex graph counts as Hamiltonian; two vertices never do.
bool is_hamiltonian(const Graph& g);

bool has_isolated_vertex(const Graph& g);

/// Perfect matching existence via subset dynamic programming (n <= 20).
bool has_perfect_matching(const Graph& g);

}  // namespace ifam
