#include "ifam/properties.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace ifam {

namespace {

constexpr int kSubsetDpLimit = 20;

// Adjacency rows as vertex bitmasks; only valid for n <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n()), 0);
  g.for_each_edge([&](int u, int v) {
    adj[u - 1] |= std::uint64_t{1} << (v - 1);
    adj[v - 1] |= std::uint64_t{1} << (u - 1);
  });
  return adj;
}

bool connected_by_masks(const Graph& g) {
  auto adj = adjacency_masks(g);
  int n = g.n();
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t reached = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connected_by_union_find(const Graph& g) {
  DisjointSet ds(g.n());
  g.for_each_edge([&](int u, int v) { ds.unite(u - 1, v - 1); });
  int root = ds.find(0);
  for (int v = 1; v < g.n(); ++v)
    if (ds.find(v) != root) return false;
  return true;
}

struct PatternMatcher {
  const Graph& host;
  std::vector<int> order;                      // pattern support, by degree desc
  std::vector<std::vector<int>> back_edges;    // indices into order of earlier neighbors
  std::vector<int> pattern_degree;             // aligned with order
  std::vector<int> assignment;                 // order index -> host vertex
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    for (int candidate = 1; candidate <= host.n(); ++candidate) {
      if (used[candidate]) continue;
      if (host.degree(candidate) < pattern_degree[depth]) continue;
      bool feasible = true;
      for (int earlier : back_edges[depth]) {
        if (!host.has_edge(std::min(assignment[earlier], candidate),
                           std::max(assignment[earlier], candidate))) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      assignment[depth] = candidate;
      used[candidate] = true;
      if (extend(depth + 1)) return true;
      used[candidate] = false;
    }
    return false;
  }
};

bool colorable_backtrack(const std::vector<std::uint64_t>& adj, int n, int r,
                         std::vector<int>& color, const std::vector<int>& order,
                         std::size_t depth, int used_colors) {
  if (depth == order.size()) return true;
  int v = order[depth];
  // Allowing at most one fresh color per step breaks color-permutation symmetry.
  int limit = std::min(r, used_colors + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    std::uint64_t nb = adj[v];
    while (nb != 0) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (color[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (colorable_backtrack(adj, n, r, color, order, depth + 1, std::max(used_colors, c + 1)))
      return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

PropertySpec PropertySpec::connected() { return {PropertyKind::Connected, {}, {}, {}}; }

PropertySpec PropertySpec::contains(Graph pattern) {
  return {PropertyKind::ContainsPattern, std::move(pattern), {}, {}};
}

PropertySpec PropertySpec::not_bipartite() { return {PropertyKind::NotBipartite, {}, {}, {}}; }

PropertySpec PropertySpec::not_r_partite(int r) {
  PropertySpec p{PropertyKind::NotRPartite, {}, r, {}};
  p.validate();
  return p;
}

PropertySpec PropertySpec::hamiltonian() { return {PropertyKind::Hamiltonian, {}, {}, {}}; }

PropertySpec PropertySpec::no_isolated_vertex() {
  return {PropertyKind::NoIsolatedVertex, {}, {}, {}};
}

PropertySpec PropertySpec::perfect_matching() {
  return {PropertyKind::ContainsPerfectMatching, {}, {}, {}};
}

PropertySpec PropertySpec::min_edges(int m) {
  PropertySpec p{PropertyKind::MinEdges, {}, {}, m};
  p.validate();
  return p;
}

void PropertySpec::validate() const {
  if (pattern.has_value() != (kind == PropertyKind::ContainsPattern))
    throw ArgumentError("pattern must be present exactly for the contains-pattern property");
  if (r.has_value() != (kind == PropertyKind::NotRPartite))
    throw ArgumentError("r must be present exactly for the not-r-partite property");
  if (r.has_value() && *r < 1) throw ArgumentError("r must be at least 1");
  if (m.has_value() != (kind == PropertyKind::MinEdges))
    throw ArgumentError("m must be present exactly for the min-edges property");
  if (m.has_value() && *m < 0) throw ArgumentError("m must be nonnegative");
}

std::string PropertySpec::describe() const {
  switch (kind) {
    case PropertyKind::Connected:
      return "connected";
    case PropertyKind::ContainsPattern:
      return "contains(" + encode(*pattern) + ")";
    case PropertyKind::NotBipartite:
      return "not-bipartite";
    case PropertyKind::NotRPartite:
      return "not-" + std::to_string(*r) + "-partite";
    case PropertyKind::Hamiltonian:
      return "hamiltonian";
    case PropertyKind::NoIsolatedVertex:
      return "no-isolated";
    case PropertyKind::ContainsPerfectMatching:
      return "perfect-matching";
    case PropertyKind::MinEdges:
      return "min-edges(" + std::to_string(*m) + ")";
  }
  return "unknown";
}

bool is_connected(const Graph& g) {
  if (g.n() == 1) return true;
  if (g.n() <= 64) return connected_by_masks(g);
  return connected_by_union_find(g);
}

bool contains_pattern(const Graph& g, const Graph& pattern) {
  std::vector<int> support;
  for (int v = 1; v <= pattern.n(); ++v)
    if (pattern.degree(v) > 0) support.push_back(v);
  if (support.empty()) return true;
  if (static_cast<int>(support.size()) > g.n()) return false;

  std::stable_sort(support.begin(), support.end(),
                   [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });

  PatternMatcher matcher{g, support, {}, {}, {}, {}};
  matcher.back_edges.resize(support.size());
  matcher.pattern_degree.resize(support.size());
  matcher.assignment.assign(support.size(), 0);
  matcher.used.assign(static_cast<std::size_t>(g.n()) + 1, false);
  for (std::size_t i = 0; i < support.size(); ++i) {
    matcher.pattern_degree[i] = pattern.degree(support[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (pattern.has_edge(std::min(support[i], support[j]), std::max(support[i], support[j])))
        matcher.back_edges[i].push_back(static_cast<int>(j));
  }
  return matcher.extend(0);
}

bool is_r_colorable(const Graph& g, int r) {
  if (r < 1) throw ArgumentError("r must be at least 1");
  int n = g.n();
  if (r >= n) return true;
  if (g.is_empty()) return true;
  if (n > 64) throw CapacityError("colorability check supports at most 64 vertices");
  if (r == 1) return g.is_empty();
  auto adj = adjacency_masks(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  std::vector<int> color(n, -1);
  return colorable_backtrack(adj, n, r, color, order, 0, 0);
}

bool is_hamiltonian(const Graph& g) {
  int n = g.n();
  if (n == 1) return true;
  if (n == 2) return false;
  if (n > kSubsetDpLimit)
    throw CapacityError("hamiltonicity check supports at most " +
                        std::to_string(kSubsetDpLimit) + " vertices");
  auto adj = adjacency_masks(g);
  // reach[mask] = endpoints v such that a path from vertex 0 covers exactly
  // `mask` and ends at v; vertex 0 is pinned into every mask.
  std::vector<std::uint64_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint64_t mask = 1; mask < reach.size(); mask += 2) {
    std::uint64_t ends = reach[mask];
    if (ends == 0) continue;
    while (ends != 0) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint64_t next = adj[v] & ~mask;
      while (next != 0) {
        int u = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (std::uint64_t{1} << u)] |= std::uint64_t{1} << u;
      }
    }
  }
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  return (reach[full] & adj[0]) != 0;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool has_perfect_matching(const Graph& g) {
  int n = g.n();
  if (n % 2 != 0) return false;
  if (n > kSubsetDpLimit)
    throw CapacityError("perfect matching check supports at most " +
                        std::to_string(kSubsetDpLimit) + " vertices");
  auto adj = adjacency_masks(g);
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  memo[0] = 1;
  auto solve = [&](auto&& self, std::uint64_t mask) -> bool {
    signed char& entry = memo[mask];
    if (entry >= 0) return entry != 0;
    int u = std::countr_zero(mask);
    std::uint64_t partners = adj[u] & mask;
    bool ok = false;
    while (partners != 0 && !ok) {
      int v = std::countr_zero(partners);
      partners &= partners - 1;
      ok = self(self, mask & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v));
    }
    entry = ok ? 1 : 0;
    return ok;
  };
  return solve(solve, (std::uint64_t{1} << n) - 1);
}

bool satisfies(const Graph& g, const PropertySpec& p) {
  p.validate();
  switch (p.kind) {
    case PropertyKind::Connected:
      return is_connected(g);
    case PropertyKind::ContainsPattern:
      return contains_pattern(g, *p.pattern);
    case PropertyKind::NotBipartite:
      return !is_r_colorable(g, 2);
    case PropertyKind::NotRPartite:
      return !is_r_colorable(g, *p.r);
    case PropertyKind::Hamiltonian:
      return is_hamiltonian(g);
    case PropertyKind::NoIsolatedVertex:
      return !has_isolated_vertex(g);
    case PropertyKind::ContainsPerfectMatching:
      return has_perfect_matching(g);
    case PropertyKind::MinEdges:
      return g.edge_count() >= *p.m;
  }
  throw ArgumentError("unknown property kind");
}

}  // namespace ifam
