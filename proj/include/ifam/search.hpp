#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/properties.hpp"

namespace ifam {

struct VerifyResult {
  bool intersecting = false;
  // A violating pair (possibly g with itself) when not intersecting.
  std::optional<std::pair<Graph, Graph>> witness;
};

/// Checks that every unordered pair, self-pairs included, has an intersection
/// satisfying p.
VerifyResult verify_family(const Family& f, const PropertySpec& p);

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 60.0;
};

struct SearchReport {
  int n = 1;
  PropertySpec property;
  Family best_family{1};
  std::size_t best_size = 0;
  mpz_class upper_bound_count;    // certified bound on any family size
  mpq_class upper_bound_density;  // the same bound over 2^{n(n-1)/2}
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0.0;
  bool budget_exhausted = false;
};

/// Unconditional exhaustive maximum over the compatibility graph; n <= 4.
SearchReport brute_force_mu(int n, const PropertySpec& p);

/// Branch-and-bound maximum-family search with greedy-coloring bounds, seeded
/// from the best known construction for connected and pattern properties.
/// The reported bound is the minimum of the half-space bound, the coset bound
/// (connected only) and the root coloring bound; matching it proves
/// optimality without exhausting the tree.
SearchReport max_family(int n, const PropertySpec& p, const SearchBudget& budget = {});

/// Every maximum-size family (deduplicated, no isomorphism quotient); n <= 4.
/// Output is ordered lexicographically by sorted member encodings.
std::vector<Family> classify_extremal(int n, const PropertySpec& p);

}  // namespace ifam
