#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ifam {

enum class BoundDirection { Lower, Upper, Equality };

std::string direction_name(BoundDirection d);

// One evaluated inequality or identity: exact rational where representable,
// floating approximation always.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;  // symbol -> rendered value
  std::optional<mpq_class> exact;
  double approx = 0.0;
  BoundDirection direction = BoundDirection::Equality;
  std::string note;
};

/// 2^{-edge_count} <= density <= 1/2 for intersecting families on a fixed
/// nonempty pattern; returns {lower, upper}.
std::pair<BoundReport, BoundReport> trivial_bounds(int edge_count);

/// The exact maximum density of connected-intersecting families: 2^{-n+1}.
BoundReport connected_value(int n);

struct UnionBinomial {
  mpq_class full_sum;     // sum_{j=t+x}^{t+2x} C(t+2x,j) p^j (1-p)^{t+2x-j}
  mpq_class single_term;  // C(t+2x,t+x) p^{t+x} (1-p)^x
};

/// Exact binomial-tail lower bound for disjoint-union-intersecting densities.
UnionBinomial union_lower_binomial(const mpq_class& p, long t, long x);

/// One term C(m,j) p^j (1-p)^{m-j} of the exact binomial distribution.
mpq_class binomial_term(const mpq_class& p, long m, long j);

struct EntropyCheck {
  mpq_class binomial_side;  // C(m,x)
  mpq_class entropy_side;   // 2^{m H(x/m)} / (m+1)  — exactly m^m / ((m+1) x^x (m-x)^{m-x})
  bool holds = false;
};

/// Verifies C(m,x) >= 2^{m H(x/m)}/(m+1) at one point, in exact arithmetic.
EntropyCheck entropy_term_check(long m, long x);

struct BracketResult {
  long double value = 0.0L;
  long x = 0;        // chosen so gamma = x/(t+2x) is closest to p
  mpq_class gamma;
  long t = 0;
};

/// The per-t bracket whose t-th power lower-bounds the union-intersecting
/// density; tends to p/(1-p) as t grows.  Requires p in (0, 1/2]; at p = 1/2
/// the two middle factors are taken at their removable-limit value 1 with
/// x pinned to 0.
BracketResult union_bracket(const mpq_class& p, long t);

BoundReport bracket_report(const BracketResult& r, const mpq_class& p);

/// Smallest t from `samples` whose bracket exceeds (1-eps) * p/(1-p).
std::optional<long> bracket_threshold(const mpq_class& p, double eps,
                                      const std::vector<long>& samples);
std::vector<long> default_threshold_samples();

/// Reference table of known densities and bounds from the literature.  The
/// n- and r-parametrized rows are included when those parameters are given.
/// Annotation only: finite-n search results are never checked against the
/// limit rows as oracles.
std::vector<BoundReport> known_values_table(std::optional<int> n = std::nullopt,
                                            std::optional<int> r = std::nullopt);

std::string render_rational(const mpq_class& q);

}  // namespace ifam
