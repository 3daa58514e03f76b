#include "ifam/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "ifam/graph.hpp"

namespace ifam {

namespace {

mpq_class pow_q(const mpq_class& base, unsigned long e) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

mpz_class binom(unsigned long m, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), m, k);
  return out;
}

mpq_class power_of_two(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

long double to_long_double(const mpq_class& q) {
  // Split num/den through mpz_get_d_2exp to keep precision for huge values.
  signed long ne = 0, de = 0;
  double nm = mpz_get_d_2exp(&ne, q.get_num_mpz_t());
  double dm = mpz_get_d_2exp(&de, q.get_den_mpz_t());
  if (dm == 0.0) return 0.0L;
  return static_cast<long double>(nm) / static_cast<long double>(dm) *
         std::exp2(static_cast<long double>(ne - de));
}

void check_probability(const mpq_class& p) {
  if (p <= 0 || p >= 1) throw ArgumentError("p must lie strictly between 0 and 1");
}

mpq_class abs_q(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

}  // namespace

std::string direction_name(BoundDirection d) {
  switch (d) {
    case BoundDirection::Lower:
      return "lower";
    case BoundDirection::Upper:
      return "upper";
    case BoundDirection::Equality:
      return "equality";
  }
  return "?";
}

std::string render_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

std::pair<BoundReport, BoundReport> trivial_bounds(int edge_count) {
  if (edge_count < 1) throw ArgumentError("trivial bounds require a pattern with at least one edge");
  BoundReport lower;
  lower.name = "trivial-lower";
  lower.parameters = {{"edges", std::to_string(edge_count)}};
  lower.exact = power_of_two(-edge_count);
  lower.approx = mpq_get_d(lower.exact->get_mpq_t());
  lower.direction = BoundDirection::Lower;
  lower.note = "star family of one fixed copy";

  BoundReport upper;
  upper.name = "trivial-upper";
  upper.parameters = lower.parameters;
  upper.exact = mpq_class(1, 2);
  upper.approx = 0.5;
  upper.direction = BoundDirection::Upper;
  upper.note = "no graph together with its complement";
  return {lower, upper};
}

BoundReport connected_value(int n) {
  if (n < 1) throw ArgumentError("vertex count must be at least 1");
  BoundReport r;
  r.name = "connected";
  r.parameters = {{"n", std::to_string(n)}};
  r.exact = power_of_two(-(n - 1));
  r.approx = mpq_get_d(r.exact->get_mpq_t());
  r.direction = BoundDirection::Equality;
  r.note = "coset certificate value, attained by spanning-tree star families";
  return r;
}

mpq_class binomial_term(const mpq_class& p, long m, long j) {
  if (m < 0 || j < 0 || j > m) throw ArgumentError("binomial term requires 0 <= j <= m");
  check_probability(p);
  mpq_class term(binom(static_cast<unsigned long>(m), static_cast<unsigned long>(j)));
  term *= pow_q(p, static_cast<unsigned long>(j));
  term *= pow_q(mpq_class(1) - p, static_cast<unsigned long>(m - j));
  term.canonicalize();
  return term;
}

UnionBinomial union_lower_binomial(const mpq_class& p, long t, long x) {
  if (t < 1) throw ArgumentError("t must be at least 1");
  if (x < 0) throw ArgumentError("x must be nonnegative");
  check_probability(p);
  long m = t + 2 * x;
  UnionBinomial out;
  out.full_sum = 0;
  for (long j = t + x; j <= m; ++j) out.full_sum += binomial_term(p, m, j);
  out.full_sum.canonicalize();
  out.single_term = binomial_term(p, m, t + x);
  return out;
}

EntropyCheck entropy_term_check(long m, long x) {
  if (m < 1 || x < 0 || x > m) throw ArgumentError("entropy check requires 0 <= x <= m, m >= 1");
  EntropyCheck out;
  out.binomial_side = mpq_class(binom(static_cast<unsigned long>(m), static_cast<unsigned long>(x)));
  // 2^{m H(x/m)} = m^m / (x^x (m-x)^{m-x}) exactly, with 0^0 = 1.
  mpz_class mm, xx, yy;
  mpz_ui_pow_ui(mm.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m));
  mpz_ui_pow_ui(xx.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(x));
  mpz_ui_pow_ui(yy.get_mpz_t(), static_cast<unsigned long>(m - x),
                static_cast<unsigned long>(m - x));
  if (x == 0) xx = 1;
  if (x == m) yy = 1;
  out.entropy_side = mpq_class(mm, mpz_class((m + 1) * xx * yy));
  out.entropy_side.canonicalize();
  out.holds = out.binomial_side >= out.entropy_side;
  return out;
}

BracketResult union_bracket(const mpq_class& p, long t) {
  if (t < 1) throw ArgumentError("t must be at least 1");
  if (p <= 0 || p > mpq_class(1, 2)) throw ArgumentError("p must lie in (0, 1/2]");

  BracketResult result;
  result.t = t;

  bool at_half = (p == mpq_class(1, 2));
  if (at_half) {
    // gamma -> p is unreachable at p = 1/2; both gamma-dependent middle
    // factors are taken at their limit value 1 and x is pinned to 0.
    result.x = 0;
  } else {
    // gamma(x) = x/(t+2x) increases in x, so the minimizer of |gamma - p|
    // neighbors x0 = p t / (1 - 2p).
    mpq_class x0 = p * t / (1 - 2 * p);
    mpz_class floor_x;
    mpz_fdiv_q(floor_x.get_mpz_t(), x0.get_num_mpz_t(), x0.get_den_mpz_t());
    if (!floor_x.fits_slong_p())
      throw CapacityError("bracket block count overflows for p this close to 1/2");
    long base = floor_x.get_si();
    long best_x = -1;
    mpq_class best_gap;
    for (long c = base - 1; c <= base + 1; ++c) {
      if (c < 0) continue;
      mpq_class gamma(c, t + 2 * c);
      gamma.canonicalize();
      mpq_class gap = abs_q(gamma - p);
      if (best_x < 0 || gap < best_gap) {  // ties keep the smaller x
        best_x = c;
        best_gap = gap;
      }
    }
    result.x = best_x;
  }

  result.gamma = mpq_class(result.x, t + 2 * result.x);
  result.gamma.canonicalize();

  long double f1 = std::exp2(-std::log2(static_cast<long double>(t + 2 * result.x + 1)) /
                             static_cast<long double>(t));
  long double f2 = 1.0L;
  long double f3;
  if (at_half || result.x == 0) {
    f3 = to_long_double(1 - p);  // (1-p)/(1-gamma) with gamma = 0
    if (at_half) f3 = 1.0L;      // removable-limit value at gamma -> p
  } else {
    const mpq_class& gamma = result.gamma;
    mpq_class ratio = (p * (1 - p)) / (gamma * (1 - gamma));
    mpq_class exponent = gamma / (1 - 2 * gamma);
    // log1p on the exact difference keeps full precision when ratio ~ 1.
    long double lg_ratio = std::log1p(to_long_double(ratio - 1)) / std::log(2.0L);
    f2 = std::exp2(to_long_double(exponent) * lg_ratio);
    f3 = to_long_double((1 - p) / (1 - gamma));
  }
  long double f4 = to_long_double(p / (1 - p));
  result.value = f1 * f2 * f3 * f4;
  return result;
}

BoundReport bracket_report(const BracketResult& r, const mpq_class& p) {
  BoundReport out;
  out.name = "union-bracket";
  out.parameters = {{"p", render_rational(p)},
                    {"t", std::to_string(r.t)},
                    {"x", std::to_string(r.x)},
                    {"gamma", render_rational(r.gamma)}};
  out.approx = static_cast<double>(r.value);
  out.direction = BoundDirection::Lower;
  out.note = "t-th root of a union-intersecting density lower bound; tends to p/(1-p)";
  return out;
}

std::optional<long> bracket_threshold(const mpq_class& p, double eps,
                                      const std::vector<long>& samples) {
  if (eps <= 0 || eps >= 1) throw ArgumentError("eps must lie strictly between 0 and 1");
  long double target =
      (1.0L - static_cast<long double>(eps)) * to_long_double(p / (1 - p));
  for (long t : samples) {
    if (union_bracket(p, t).value > target) return t;
  }
  return std::nullopt;
}

std::vector<long> default_threshold_samples() {
  std::vector<long> out;
  for (long t = 1; t <= (1L << 17); t *= 2) out.push_back(t);
  return out;
}

std::vector<BoundReport> known_values_table(std::optional<int> n, std::optional<int> r) {
  std::vector<BoundReport> table;
  auto push = [&](std::string name, BoundDirection dir, std::optional<mpq_class> exact,
                  double approx, std::string note,
                  std::vector<std::pair<std::string, std::string>> params = {}) {
    BoundReport b;
    b.name = std::move(name);
    b.direction = dir;
    b.exact = std::move(exact);
    b.approx = b.exact ? mpq_get_d(b.exact->get_mpq_t()) : approx;
    b.note = std::move(note);
    b.parameters = std::move(params);
    table.push_back(std::move(b));
  };

  push("contains-triangle", BoundDirection::Equality, mpq_class(1, 8), 0.125,
       "known exact value; attained only by triangle star families");
  push("not-bipartite", BoundDirection::Equality, mpq_class(1, 8), 0.125, "known exact value");
  push("contains-path3", BoundDirection::Lower, mpq_class(17, 128), 17.0 / 128.0,
       "known construction beating the one-copy star family");

  if (n) {
    if (*n < 1) throw ArgumentError("vertex count must be at least 1");
    std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(*n)}};
    std::optional<mpq_class> half_exp;
    if (*n % 2 == 0) half_exp = power_of_two(-*n / 2);
    double half_approx = std::exp2(-*n / 2.0);
    push("no-isolated-vertices", BoundDirection::Upper, half_exp, half_approx,
         "entropy-method bound; tight for even n via perfect-matching stars", params);
    push("perfect-matching", BoundDirection::Upper, half_exp, half_approx,
         "dominated by the no-isolated-vertices bound", params);
    push("hamiltonian-lower", BoundDirection::Lower, power_of_two(-*n), 0.0,
         "star family of one fixed spanning cycle", params);
    push("hamiltonian-upper", BoundDirection::Upper, power_of_two(-(*n - 1)), 0.0,
         "hamiltonian graphs are connected", params);
    push("connected", BoundDirection::Equality, power_of_two(-(*n - 1)), 0.0,
         "coset certificate value", params);
  }
  if (r) {
    if (*r < 1) throw ArgumentError("r must be at least 1");
    push("not-r-partite", BoundDirection::Upper, power_of_two(-*r), 0.0,
         "entropy-method bound, quoted value only",
         {{"r", std::to_string(*r)}});
  }
  return table;
}

}  // namespace ifam
