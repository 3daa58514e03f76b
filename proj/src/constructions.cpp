#include "ifam/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "ifam/properties.hpp"

namespace ifam {

namespace {

// Materialized families are for desk-scale work; 2^20 members is the cap.
constexpr int kFamilyBitCap = 20;
constexpr std::uint64_t kFamilyCap = std::uint64_t{1} << kFamilyBitCap;
constexpr int kTensorEnumerationBits = 24;

VertexSet graph_support(const Graph& g) {
  VertexSet s(g.n());
  g.for_each_edge([&](int u, int v) {
    s.add(u);
    s.add(v);
  });
  return s;
}

bool is_tree_on_support(const Graph& g, const VertexSet& support) {
  int k = support.size();
  if (k < 2) return false;  // an edge-set tree needs at least one edge
  if (g.edge_count() != k - 1) return false;
  // Connectivity on the support via union-find.
  std::vector<int> parent(g.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  g.for_each_edge([&](int u, int v) { parent[find(u)] = find(v); });
  int root = -1;
  for (int v : support.members()) {
    if (root < 0) root = find(v);
    if (find(v) != root) return false;
  }
  return true;
}

// All graphs formed from `base` by adding arbitrary subsets of free_positions.
void emit_free_extensions(Family& out, const Graph& base, const std::vector<int>& free_positions) {
  std::uint64_t total = std::uint64_t{1} << free_positions.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = base;
    std::uint64_t rest = mask;
    while (rest != 0) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      g.set_bit(free_positions[i]);
    }
    out.insert(std::move(g));
  }
}

std::vector<std::uint64_t> majority_masks(int s_count) {
  int need = (s_count + 2) / 2;  // ceil(s/2) for odd s is a strict majority
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s_count); ++mask)
    if (std::popcount(mask) >= need) out.push_back(mask);
  return out;
}

void check_member_budget(std::uint64_t members, const char* what) {
  if (members > kFamilyCap)
    throw CapacityError(std::string(what) + " would materialize " + std::to_string(members) +
                        " graphs; cap is " + std::to_string(kFamilyCap));
}

}  // namespace

Family star_family(int n, const Graph& h) {
  if (h.n() != n) throw ArgumentError("base graph must live on the requested vertex count");
  int slots = edge_slots(n);
  int free = slots - h.edge_count();
  if (free > kFamilyBitCap)
    throw CapacityError("star family would have 2^" + std::to_string(free) +
                        " members; cap is 2^" + std::to_string(kFamilyBitCap));
  std::vector<int> free_positions;
  for (int i = 0; i < slots; ++i)
    if (!h.test(i)) free_positions.push_back(i);
  Family out(n);
  emit_free_extensions(out, h, free_positions);
  return out;
}

VertexSet TreePairSpec::support_a() const { return graph_support(a); }
VertexSet TreePairSpec::support_b() const { return graph_support(b); }

void TreePairSpec::validate() const {
  if (a.n() != b.n()) throw ArgumentError("A and B must live on the same vertex count");
  int nv = a.n();
  VertexSet sa = support_a();
  VertexSet sb = support_b();
  if (!is_tree_on_support(a, sa)) throw ArgumentError("A must be a tree on its support");
  if (!is_tree_on_support(b, sb)) throw ArgumentError("B must be a tree on its support");
  for (int v = 1; v <= nv; ++v) {
    if (sa.contains(v) && sb.contains(v))
      throw ArgumentError("supports of A and B must be disjoint");
    if (!sa.contains(v) && !sb.contains(v))
      throw ArgumentError("supports of A and B must span every vertex");
  }
  std::unordered_set<int> seen;
  for (auto [u, v] : s) {
    int index = edge_index(std::min(u, v), std::max(u, v), nv);
    bool crosses = (sa.contains(u) && sb.contains(v)) || (sb.contains(u) && sa.contains(v));
    if (!crosses) throw ArgumentError("S edges must cross between A and B");
    if (!seen.insert(index).second) throw ArgumentError("S must not repeat edges");
  }
  if (s.size() % 2 == 0) throw ArgumentError("odd |S| required");
}

namespace {

Family treepair_core(const TreePairSpec& spec, const std::vector<Graph>& a_side_choices,
                     const std::vector<int>& a_side_positions) {
  // a_side_choices: admissible edge sets on the positions listed in
  // a_side_positions (for the plain construction, just {A}); everything else
  // follows the containment-plus-majority rule.
  int nv = spec.n();
  int slots = edge_slots(nv);

  std::vector<int> s_positions;
  for (auto [u, v] : spec.s) s_positions.push_back(edge_index(std::min(u, v), std::max(u, v), nv));

  std::vector<bool> reserved(slots, false);
  for (int p : a_side_positions) reserved[p] = true;
  for (int p : s_positions) reserved[p] = true;
  spec.b.for_each_edge([&](int u, int v) { reserved[edge_index(u, v, nv)] = true; });

  std::vector<int> free_positions;
  for (int i = 0; i < slots; ++i)
    if (!reserved[i]) free_positions.push_back(i);

  auto majorities = majority_masks(static_cast<int>(s_positions.size()));
  check_member_budget(static_cast<std::uint64_t>(a_side_choices.size()) * majorities.size() *
                          (std::uint64_t{1} << free_positions.size()),
                      "treepair family");

  Family out(nv);
  for (const Graph& choice : a_side_choices) {
    Graph base = choice ^ spec.b;  // disjoint edge sets, so XOR is union
    for (std::uint64_t s_mask : majorities) {
      Graph with_s = base;
      for (std::size_t i = 0; i < s_positions.size(); ++i)
        if ((s_mask >> i) & 1) with_s.set_bit(s_positions[i]);
      emit_free_extensions(out, with_s, free_positions);
    }
  }
  return out;
}

}  // namespace

Family treepair_family(const TreePairSpec& spec) {
  spec.validate();
  int nv = spec.n();
  std::vector<int> a_positions;
  spec.a.for_each_edge([&](int u, int v) { a_positions.push_back(edge_index(u, v, nv)); });
  return treepair_core(spec, {spec.a}, a_positions);
}

Family iterate_treepair(const TreePairSpec& spec, const Family& inner) {
  spec.validate();
  int nv = spec.n();
  std::vector<int> a_vertices = spec.support_a().members();  // ascending
  if (inner.n() != static_cast<int>(a_vertices.size()))
    throw ArgumentError("inner family must live on " + std::to_string(a_vertices.size()) +
                        " vertices (the support of A)");

  // Every pair inside A's support is owned by the inner choice, present or not.
  std::vector<int> a_side_positions;
  for (std::size_t i = 0; i < a_vertices.size(); ++i)
    for (std::size_t j = i + 1; j < a_vertices.size(); ++j)
      a_side_positions.push_back(edge_index(a_vertices[i], a_vertices[j], nv));

  std::vector<Graph> choices;
  choices.reserve(inner.size());
  for (const Graph& m : inner.sorted_members()) {
    Graph lifted(nv);
    m.for_each_edge([&](int u, int v) { lifted.set_edge(a_vertices[u - 1], a_vertices[v - 1]); });
    choices.push_back(std::move(lifted));
  }
  return treepair_core(spec, choices, a_side_positions);
}

Family exceptional_n4() {
  Family out(4);
  out.insert(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  Graph k4 = Graph::complete(4);
  out.insert(k4);
  for (int i = 0; i < 6; ++i) {
    Graph g = k4;
    g.set_bit(i, false);
    out.insert(std::move(g));
  }
  return out;
}

Graph union_pattern(const Graph& gamma, int t) {
  if (t < 1) throw ArgumentError("t must be at least 1");
  long total = static_cast<long>(t) * gamma.n();
  if (total > kMaxVertices)
    throw CapacityError("union pattern on " + std::to_string(total) + " vertices exceeds limit");
  Graph out(static_cast<int>(total));
  for (int copy = 0; copy < t; ++copy) {
    int offset = copy * gamma.n();
    gamma.for_each_edge([&](int u, int v) { out.set_edge(offset + u, offset + v); });
  }
  return out;
}

Graph block_subgraph(const Graph& g, int block, int block_size) {
  if (block_size < 1 || g.n() % block_size != 0)
    throw ArgumentError("graph size is not a multiple of the block size");
  int blocks = g.n() / block_size;
  if (block < 1 || block > blocks) throw ArgumentError("block index out of range");
  int offset = (block - 1) * block_size;
  Graph out(block_size);
  for (int u = 1; u <= block_size; ++u)
    for (int v = u + 1; v <= block_size; ++v)
      if (g.has_edge(offset + u, offset + v)) out.set_edge(u, v);
  return out;
}

bool tensor_member(const Family& f, int a, int b, const Graph& g) {
  if (a < 0 || b < a || b < 1) throw ArgumentError("tensor thresholds require 0 <= a <= b, b >= 1");
  if (g.n() != b * f.n())
    throw ArgumentError("tensor membership requires a graph on " + std::to_string(b * f.n()) +
                        " vertices");
  int hits = 0;
  for (int i = 1; i <= b; ++i) {
    if (f.contains(block_subgraph(g, i, f.n()))) ++hits;
    if (hits >= a) return true;
  }
  return hits >= a;  // covers a == 0
}

Family tensor_family(const Family& f, int a, int b) {
  if (a < 0 || b < a || b < 1) throw ArgumentError("tensor thresholds require 0 <= a <= b, b >= 1");
  int big_n = b * f.n();
  if (big_n > kMaxVertices) throw CapacityError("tensored vertex count exceeds limit");
  int slots = edge_slots(big_n);
  if (slots > kTensorEnumerationBits)
    throw CapacityError("tensor materialization needs 2^" + std::to_string(slots) +
                        " candidates; cap is 2^" + std::to_string(kTensorEnumerationBits) +
                        " (use the membership predicate instead)");

  std::uint64_t members = 0;
  for_each_graph(big_n, [&](const Graph& g) {
    if (tensor_member(f, a, b, g)) ++members;
  });
  check_member_budget(members, "tensor family");

  Family out(big_n);
  for_each_graph(big_n, [&](const Graph& g) {
    if (tensor_member(f, a, b, g)) out.insert(g);
  });
  return out;
}

TensorDensity tensor_density(const Family& f, int a, int b) {
  if (a < 0 || b < a || b < 1) throw ArgumentError("tensor thresholds require 0 <= a <= b, b >= 1");
  int bits_per_block = edge_slots(f.n());
  long total_bits = static_cast<long>(bits_per_block) * b;
  if (total_bits > kEnumerationBitLimit)
    throw CapacityError("block-pattern enumeration needs 2^" + std::to_string(total_bits) +
                        " patterns; cap is 2^" + std::to_string(kEnumerationBitLimit));

  std::vector<bool> in_family(std::size_t{1} << bits_per_block, false);
  for_each_graph_code(f.n(), [&](std::uint64_t code) {
    in_family[code] = f.contains(Graph::from_bits(f.n(), code));
  });

  std::uint64_t mask = (bits_per_block == 64) ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << bits_per_block) - 1;
  std::uint64_t qualifying = 0;
  std::uint64_t space = std::uint64_t{1} << total_bits;
  for (std::uint64_t tuple = 0; tuple < space; ++tuple) {
    int hits = 0;
    for (int i = 0; i < b; ++i)
      if (in_family[(tuple >> (i * bits_per_block)) & mask]) ++hits;
    if (hits >= a) ++qualifying;
  }

  TensorDensity result;
  result.qualifying_patterns = mpz_class(static_cast<unsigned long>(qualifying));
  mpz_ui_pow_ui(result.pattern_space.get_mpz_t(), 2, static_cast<unsigned long>(total_bits));
  result.density = mpq_class(result.qualifying_patterns, result.pattern_space);
  result.density.canonicalize();
  return result;
}

}  // namespace ifam
