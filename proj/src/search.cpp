#include "ifam/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "ifam/constructions.hpp"
#include "ifam/cosets.hpp"

namespace ifam {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kBruteForceVertexLimit = 4;
constexpr int kClassifyVertexLimit = 4;
// Full-space branch and bound enumerates every self-compatible graph.
constexpr int kSearchBitLimit = 24;
// Above this many candidates the adjacency matrix is not materialized and the
// solver falls back to on-demand compatibility checks without coloring.
constexpr std::size_t kAdjacencyCandidateLimit = std::size_t{1} << 16;

bool code_connected(int n, std::uint64_t code) {
  std::uint32_t adj[12] = {};
  std::uint64_t bits = code;
  while (bits != 0) {
    int b = std::countr_zero(bits);
    bits &= bits - 1;
    auto [u, v] = edge_endpoints(b, n);
    adj[u - 1] |= std::uint32_t{1} << (v - 1);
    adj[v - 1] |= std::uint32_t{1} << (u - 1);
  }
  std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::uint32_t reached = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
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

struct PropertyOracle {
  int n;
  PropertySpec spec;
  bool fast_connected;

  PropertyOracle(int n_, const PropertySpec& p)
      : n(n_), spec(p), fast_connected(p.kind == PropertyKind::Connected && n_ <= 12) {}

  bool operator()(std::uint64_t code) const {
    if (fast_connected) return code_connected(n, code);
    return satisfies(Graph::from_bits(n, code), spec);
  }
};

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.set_edge(v, v + 1);
  return g;
}

// Places the pattern's non-isolated support on the lowest labels of {1..n}.
std::optional<Graph> embed_pattern(const Graph& pattern, int n) {
  std::vector<int> support;
  for (int v = 1; v <= pattern.n(); ++v)
    if (pattern.degree(v) > 0) support.push_back(v);
  if (static_cast<int>(support.size()) > n) return std::nullopt;
  std::vector<int> slot(pattern.n() + 1, 0);
  for (std::size_t i = 0; i < support.size(); ++i) slot[support[i]] = static_cast<int>(i) + 1;
  Graph out(n);
  pattern.for_each_edge([&](int u, int v) { out.set_edge(slot[u], slot[v]); });
  return out;
}

std::optional<Family> seed_family(int n, const PropertySpec& p) {
  try {
    if (p.kind == PropertyKind::Connected && n >= 2) return star_family(n, path_graph(n));
    if (p.kind == PropertyKind::ContainsPattern) {
      auto embedded = embed_pattern(*p.pattern, n);
      if (embedded && !embedded->is_empty()) return star_family(n, *embedded);
    }
  } catch (const CapacityError&) {
    // A seed is a convenience; search proceeds without one.
  }
  return std::nullopt;
}

struct Candidates {
  std::vector<std::uint64_t> codes;
  bool aborted = false;  // deadline hit during enumeration
};

Candidates collect_candidates(int n, const PropertyOracle& oracle, Clock::time_point deadline) {
  Candidates out;
  int slots = edge_slots(n);
  std::uint64_t total = std::uint64_t{1} << slots;
  for (std::uint64_t code = 0; code < total; ++code) {
    if ((code & 0xffff) == 0 && Clock::now() > deadline) {
      out.aborted = true;
      return out;
    }
    if (oracle(code)) out.codes.push_back(code);
  }
  return out;
}

// Exact max-clique solver over an explicit compatibility matrix, with greedy
// coloring bounds (Tomita-style) and node/time budgets.
struct CliqueSolver {
  std::size_t count = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> matrix;  // row-major bitsets
  std::uint64_t max_nodes = ~std::uint64_t{0};
  Clock::time_point deadline = Clock::time_point::max();
  std::size_t early_stop_at = ~std::size_t{0};

  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool stopped_early = false;
  std::vector<int> best;
  std::vector<int> current;

  const std::uint64_t* row(int v) const { return matrix.data() + static_cast<std::size_t>(v) * words; }
  bool adjacent(int u, int v) const { return (row(u)[v / 64] >> (v % 64)) & 1; }

  bool budget_ok() {
    if (nodes >= max_nodes || ((nodes & 0xfff) == 0 && Clock::now() > deadline)) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  void take_current_as_best() {
    best = current;
    if (best.size() >= early_stop_at) stopped_early = true;
  }

  // Greedy coloring; returns candidates sorted by ascending color.
  void color_sort(const std::vector<int>& p, std::vector<int>& ordered, std::vector<int>& colors) {
    static thread_local std::vector<std::vector<int>> classes;
    std::size_t used = 0;
    for (int v : p) {
      std::size_t c = 0;
      for (; c < used; ++c) {
        bool clash = false;
        for (int u : classes[c])
          if (adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == used) {
        if (classes.size() <= used) classes.emplace_back();
        classes[used].clear();
        ++used;
      }
      classes[c].push_back(v);
    }
    ordered.clear();
    colors.clear();
    for (std::size_t c = 0; c < used; ++c) {
      for (int v : classes[c]) {
        ordered.push_back(v);
        colors.push_back(static_cast<int>(c) + 1);
      }
      classes[c].clear();
    }
  }

  void expand(std::vector<int>& p) {
    ++nodes;
    if (!budget_ok()) return;
    if (p.empty()) {
      if (current.size() > best.size()) take_current_as_best();
      return;
    }
    std::vector<int> ordered, colors;
    color_sort(p, ordered, colors);
    for (std::size_t i = ordered.size(); i-- > 0;) {
      if (out_of_budget || stopped_early) return;
      if (current.size() + static_cast<std::size_t>(colors[i]) <= best.size()) return;
      int v = ordered[i];
      std::vector<int> next;
      next.reserve(i);
      for (std::size_t j = 0; j < i; ++j)
        if (adjacent(ordered[j], v)) next.push_back(ordered[j]);
      current.push_back(v);
      if (next.empty()) {
        if (current.size() > best.size()) take_current_as_best();
      } else {
        expand(next);
      }
      current.pop_back();
    }
  }

  // Root coloring of the full candidate set: a certified clique bound.
  std::size_t root_color_bound() {
    std::vector<int> all(count);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> ordered, colors;
    color_sort(all, ordered, colors);
    return colors.empty() ? 0 : static_cast<std::size_t>(colors.back());
  }
};

// Plain complete search with only the size prune; the independent route used
// by brute_force_mu and classify_extremal.
struct PlainSolver {
  const std::vector<std::uint64_t>* adj = nullptr;  // bitset rows over candidates
  std::size_t words = 0;
  std::uint64_t nodes = 0;
  std::vector<int> best;
  std::vector<int> current;

  bool adjacent(int u, int v) const {
    return ((*adj)[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64)) & 1;
  }

  void expand(std::vector<int>& p) {
    ++nodes;
    if (current.size() + p.size() <= best.size()) return;
    if (p.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    while (!p.empty()) {
      if (current.size() + p.size() <= best.size()) return;
      int v = p.back();
      p.pop_back();
      std::vector<int> next;
      next.reserve(p.size());
      for (int u : p)
        if (adjacent(u, v)) next.push_back(u);
      current.push_back(v);
      expand(next);
      current.pop_back();
    }
  }
};

std::vector<std::uint64_t> build_matrix(int n, const std::vector<std::uint64_t>& codes,
                                        const PropertyOracle& oracle, std::size_t words,
                                        Clock::time_point deadline, bool& aborted) {
  std::size_t count = codes.size();
  std::vector<std::uint64_t> matrix(count * words, 0);
  for (std::size_t i = 0; i < count; ++i) {
    if (Clock::now() > deadline) {
      aborted = true;
      return matrix;
    }
    for (std::size_t j = i + 1; j < count; ++j) {
      if (oracle(codes[i] & codes[j])) {
        matrix[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        matrix[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return matrix;
}

mpz_class half_space_bound(int n, const PropertySpec& p) {
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), 2, static_cast<unsigned long>(edge_slots(n)));
  // A family whose property rejects the empty graph cannot contain both a
  // graph and its complement.
  if (!satisfies(Graph::empty(n), p)) return space / 2;
  return space;
}

mpz_class coset_bound(int n) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(edge_slots(n) - (n - 1)));
  return b;
}

Family family_from_codes(int n, const std::vector<std::uint64_t>& all_codes,
                         const std::vector<int>& picked) {
  Family f(n);
  for (int idx : picked) f.insert(Graph::from_bits(n, all_codes[idx]));
  return f;
}

void assert_sound(const SearchReport& report) {
  // Desk-scale tripwire; larger outputs are covered by the test suite.
  if (report.best_size == 0 || report.best_size > 4096) return;
  if (!verify_family(report.best_family, report.property).intersecting)
    throw std::logic_error("search produced a non-intersecting family");
  if (report.property.kind == PropertyKind::Connected &&
      !verify_anticluster(report.best_family).certified())
    throw std::logic_error("connected search output failed the coset certificate");
}

void finish_report(SearchReport& report, Clock::time_point start) {
  report.best_size = report.best_family.size();
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), 2, static_cast<unsigned long>(edge_slots(report.n)));
  report.upper_bound_density = mpq_class(report.upper_bound_count, space);
  report.upper_bound_density.canonicalize();
  report.wall_seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
  assert_sound(report);
}

}  // namespace

VerifyResult verify_family(const Family& f, const PropertySpec& p) {
  p.validate();
  const auto members = f.sorted_members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      if (!satisfies(members[i] & members[j], p))
        return {false, std::make_pair(members[i], members[j])};
    }
  }
  return {true, std::nullopt};
}

SearchReport brute_force_mu(int n, const PropertySpec& p) {
  p.validate();
  if (n > kBruteForceVertexLimit)
    throw CapacityError("brute-force search capped at n=" +
                        std::to_string(kBruteForceVertexLimit) + "; use max_family");
  auto start = Clock::now();
  PropertyOracle oracle(n, p);

  std::vector<std::uint64_t> codes;
  for_each_graph_code(n, [&](std::uint64_t code) {
    if (oracle(code)) codes.push_back(code);
  });

  std::size_t count = codes.size();
  std::size_t words = (count + 63) / 64;
  bool aborted = false;
  auto matrix = build_matrix(n, codes, oracle, words, Clock::time_point::max(), aborted);

  PlainSolver solver;
  solver.adj = &matrix;
  solver.words = words;
  std::vector<int> all(count);
  std::iota(all.begin(), all.end(), 0);
  solver.expand(all);

  SearchReport report;
  report.n = n;
  report.property = p;
  report.best_family = family_from_codes(n, codes, solver.best);
  report.upper_bound_count = mpz_class(static_cast<unsigned long>(solver.best.size()));
  report.optimal = true;
  report.nodes_explored = solver.nodes;
  finish_report(report, start);
  return report;
}

SearchReport max_family(int n, const PropertySpec& p, const SearchBudget& budget) {
  p.validate();
  int slots = edge_slots(n);
  if (slots > kSearchBitLimit)
    throw CapacityError("max_family enumerates the full graph space; capped at " +
                        std::to_string(kSearchBitLimit) + " edge bits (n <= 7)");

  auto start = Clock::now();
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(budget.max_seconds));

  SearchReport report;
  report.n = n;
  report.property = p;
  report.best_family = Family(n);

  mpz_class bound = half_space_bound(n, p);
  if (p.kind == PropertyKind::Connected && n >= 2) bound = std::min(bound, coset_bound(n));

  PropertyOracle oracle(n, p);
  auto candidates = collect_candidates(n, oracle, deadline);
  if (candidates.aborted) {
    report.upper_bound_count = bound;
    report.budget_exhausted = true;
    if (auto seed = seed_family(n, p)) report.best_family = std::move(*seed);
    finish_report(report, start);
    return report;
  }
  bound = std::min(bound, mpz_class(static_cast<unsigned long>(candidates.codes.size())));

  if (auto seed = seed_family(n, p)) report.best_family = std::move(*seed);

  if (mpz_class(static_cast<unsigned long>(report.best_family.size())) >= bound) {
    // The construction already meets the certified bound; no tree needed.
    report.upper_bound_count = bound;
    report.optimal = true;
    finish_report(report, start);
    return report;
  }

  if (candidates.codes.size() > kAdjacencyCandidateLimit) {
    // Too many candidates for a compatibility matrix: run the plain solver
    // with on-demand checks under the node budget.
    struct LazySolver {
      const std::vector<std::uint64_t>* codes;
      const PropertyOracle* oracle;
      std::uint64_t max_nodes;
      Clock::time_point deadline;
      std::uint64_t nodes = 0;
      bool out_of_budget = false;
      std::vector<int> best, current;

      void expand(std::vector<int>& p) {
        ++nodes;
        if (nodes >= max_nodes || ((nodes & 0x3ff) == 0 && Clock::now() > deadline)) {
          out_of_budget = true;
          return;
        }
        if (p.empty()) {
          if (current.size() > best.size()) best = current;
          return;
        }
        while (!p.empty() && !out_of_budget) {
          if (current.size() + p.size() <= best.size()) return;
          int v = p.back();
          p.pop_back();
          std::vector<int> next;
          for (int u : p)
            if ((*oracle)((*codes)[u] & (*codes)[v])) next.push_back(u);
          current.push_back(v);
          expand(next);
          current.pop_back();
        }
      }
    } lazy{&candidates.codes, &oracle, budget.max_nodes, deadline};

    std::vector<int> all(candidates.codes.size());
    std::iota(all.begin(), all.end(), 0);
    lazy.expand(all);

    if (lazy.best.size() > report.best_family.size())
      report.best_family = family_from_codes(n, candidates.codes, lazy.best);
    report.upper_bound_count = bound;
    report.nodes_explored = lazy.nodes;
    report.budget_exhausted = lazy.out_of_budget;
    report.optimal = !lazy.out_of_budget ||
                     mpz_class(static_cast<unsigned long>(report.best_family.size())) >= bound;
    finish_report(report, start);
    return report;
  }

  std::size_t count = candidates.codes.size();

  // Order candidates by descending compatibility degree before building rows.
  std::size_t words = (count + 63) / 64;
  bool aborted = false;
  auto matrix = build_matrix(n, candidates.codes, oracle, words, deadline, aborted);
  if (aborted) {
    report.upper_bound_count = bound;
    report.budget_exhausted = true;
    finish_report(report, start);
    return report;
  }

  std::vector<int> degree(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    int d = 0;
    for (std::size_t w = 0; w < words; ++w) d += std::popcount(matrix[i * words + w]);
    degree[i] = d;
  }
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });

  std::vector<std::uint64_t> permuted_codes(count);
  for (std::size_t i = 0; i < count; ++i) permuted_codes[i] = candidates.codes[order[i]];
  std::vector<std::uint64_t> permuted(count * words, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      std::size_t oi = order[i], oj = order[j];
      if (i != j && ((matrix[oi * words + oj / 64] >> (oj % 64)) & 1))
        permuted[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    }

  CliqueSolver solver;
  solver.count = count;
  solver.words = words;
  solver.matrix = std::move(permuted);
  solver.max_nodes = budget.max_nodes;
  solver.deadline = deadline;

  std::size_t root_bound = solver.root_color_bound();
  bound = std::min(bound, mpz_class(static_cast<unsigned long>(root_bound)));
  report.upper_bound_count = bound;

  if (mpz_class(static_cast<unsigned long>(report.best_family.size())) >= bound) {
    report.optimal = true;
    finish_report(report, start);
    return report;
  }

  // The seed primes the incumbent size only; its members are never
  // re-discovered by the tree walk.
  solver.best.assign(report.best_family.size(), -1);
  solver.early_stop_at = mpz_fits_ulong_p(bound.get_mpz_t())
                             ? static_cast<std::size_t>(bound.get_ui())
                             : ~std::size_t{0};

  std::vector<int> all(count);
  std::iota(all.begin(), all.end(), 0);
  solver.expand(all);

  bool found_better = !solver.best.empty() && solver.best.front() >= 0 &&
                      solver.best.size() > report.best_family.size();
  if (found_better) report.best_family = family_from_codes(n, permuted_codes, solver.best);
  report.nodes_explored = solver.nodes;
  report.budget_exhausted = solver.out_of_budget;
  report.optimal =
      !solver.out_of_budget ||
      mpz_class(static_cast<unsigned long>(report.best_family.size())) >= bound;
  finish_report(report, start);
  return report;
}

std::vector<Family> classify_extremal(int n, const PropertySpec& p) {
  p.validate();
  if (n > kClassifyVertexLimit)
    throw CapacityError("extremal classification capped at n=" +
                        std::to_string(kClassifyVertexLimit));

  PropertyOracle oracle(n, p);
  std::vector<std::uint64_t> codes;
  for_each_graph_code(n, [&](std::uint64_t code) {
    if (oracle(code)) codes.push_back(code);
  });
  std::size_t count = codes.size();
  std::size_t words = (count + 63) / 64;
  bool aborted = false;
  auto matrix = build_matrix(n, codes, oracle, words, Clock::time_point::max(), aborted);

  PlainSolver probe;
  probe.adj = &matrix;
  probe.words = words;
  std::vector<int> all(count);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> scratch = all;  // expand consumes its candidate list
  probe.expand(scratch);
  std::size_t target = probe.best.size();

  std::vector<std::vector<int>> cliques;
  std::vector<int> current;
  auto adjacent = [&](int u, int v) {
    return (matrix[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64)) & 1;
  };
  auto enumerate = [&](auto&& self, const std::vector<int>& p) -> void {
    if (current.size() == target) {
      cliques.push_back(current);
      return;
    }
    if (current.size() + p.size() < target) return;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (current.size() + (p.size() - i) < target) break;
      int v = p[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (adjacent(p[j], v)) next.push_back(p[j]);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  if (target > 0) enumerate(enumerate, all);

  std::vector<Family> result;
  result.reserve(cliques.size());
  for (const auto& clique : cliques) result.push_back(family_from_codes(n, codes, clique));
  std::sort(result.begin(), result.end(), [](const Family& a, const Family& b) {
    return a.sorted_members() < b.sorted_members();
  });

  for (const Family& f : result) {
    if (!verify_family(f, p).intersecting)
      throw std::logic_error("classification produced a non-intersecting family");
  }
  return result;
}

}  // namespace ifam
