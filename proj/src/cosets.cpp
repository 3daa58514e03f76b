#include "ifam/cosets.hpp"

#include <algorithm>
#include <unordered_map>

namespace ifam {

Graph canonical_rep(const Graph& g) {
  int n = g.n();
  Graph rep = g;
  // Edge (i,n) lies in exactly one basis element B({i}), so clearing the
  // pivots in increasing i is a one-pass echelon reduction.
  for (int i = 1; i < n; ++i) {
    if (rep.has_edge(i, n)) rep = rep ^ bipartite_complete(n, VertexSet::of(n, {i}));
  }
  return rep;
}

std::vector<Graph> subspace_w(int n) {
  if (n < 1) throw ArgumentError("vertex count must be at least 1");
  if (n > 20) throw CapacityError("subspace listing capped at n=20 (2^{n-1} elements)");
  // Subsets of {1..n-1} pick exactly one representative per unordered cut
  // (B(S) = B(S complement)), so every element of W appears exactly once.
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    VertexSet s(n);
    for (int i = 0; i < n - 1; ++i)
      if ((mask >> i) & 1) s.add(i + 1);
    out.push_back(bipartite_complete(n, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexSet> crossing_cut(const Graph& g) {
  if (g.is_empty()) return std::nullopt;
  int n = g.n();
  VertexSet side(n);
  for (int v = 2; v <= n; ++v)
    if (g.has_edge(1, v)) side.add(v);
  if (g == bipartite_complete(n, side)) return side;
  return std::nullopt;
}

bool in_subspace_w(const Graph& g) { return g.is_empty() || crossing_cut(g).has_value(); }

AnticlusterReport verify_anticluster(const Family& f) {
  int n = f.n();
  AnticlusterReport report;
  report.family_size = f.size();
  mpz_ui_pow_ui(report.bound_num.get_mpz_t(), 2, static_cast<unsigned long>(edge_slots(n)));
  mpz_ui_pow_ui(report.bound_den.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));

  std::unordered_map<CosetId, Graph, CosetIdHash> first_hit;  // coset -> first member
  for (const Graph& g : f.sorted_members()) {
    auto [it, inserted] = first_hit.try_emplace(CosetId::of(g), g);
    if (!inserted) report.violations.emplace_back(it->second, g);
  }
  report.cosets_hit = first_hit.size();
  return report;
}

std::optional<VertexSet> disconnection_witness(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n()) throw ArgumentError("graphs live on different vertex counts");
  if (g1 == g2) throw ArgumentError("disconnection witness requires distinct graphs");
  return crossing_cut(g1 ^ g2);
}

}  // namespace ifam
