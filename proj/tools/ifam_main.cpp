#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ifam/bounds.hpp"
#include "ifam/constructions.hpp"
#include "ifam/cosets.hpp"
#include "ifam/family.hpp"
#include "ifam/properties.hpp"
#include "ifam/report.hpp"
#include "ifam/search.hpp"

namespace {

using ifam::ArgumentError;
using ifam::CapacityError;
using nlohmann::json;

// Exit codes: 0 success, 1 property violation, 2 malformed input, 3 capacity.
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapacity = 3;

std::vector<std::string> g_command;

void emit_envelope(const std::string& kind, json payload, const std::string& json_path,
                   const std::string& summary) {
  json envelope = ifam::make_envelope(kind, std::move(payload), g_command);
  if (json_path.empty()) {
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::ofstream out(json_path);
    if (!out) throw ArgumentError("cannot open JSON output path: " + json_path);
    out << envelope.dump(2) << "\n";
    if (!summary.empty()) std::cout << summary << "\n";
  }
}

struct PropertyFlags {
  std::string property = "connected";
  std::string pattern;
  int r = 0;
  int m = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--property", property,
                    "connected|contains|not-bipartite|not-r-partite|hamiltonian|"
                    "no-isolated|perfect-matching|min-edges")
        ->default_val("connected");
    cmd->add_option("--pattern", pattern, "pattern graph encoding (for contains)");
    cmd->add_option("--r", r, "part count (for not-r-partite)");
    cmd->add_option("--m", m, "edge threshold (for min-edges)");
  }

  ifam::PropertySpec to_spec() const {
    if (property == "connected") return ifam::PropertySpec::connected();
    if (property == "contains") {
      if (pattern.empty()) throw ArgumentError("--pattern is required for contains");
      return ifam::PropertySpec::contains(ifam::decode(pattern));
    }
    if (property == "not-bipartite") return ifam::PropertySpec::not_bipartite();
    if (property == "not-r-partite") {
      if (r < 1) throw ArgumentError("--r (at least 1) is required for not-r-partite");
      return ifam::PropertySpec::not_r_partite(r);
    }
    if (property == "hamiltonian") return ifam::PropertySpec::hamiltonian();
    if (property == "no-isolated") return ifam::PropertySpec::no_isolated_vertex();
    if (property == "perfect-matching") return ifam::PropertySpec::perfect_matching();
    if (property == "min-edges") {
      if (m < 0) throw ArgumentError("--m (nonnegative) is required for min-edges");
      return ifam::PropertySpec::min_edges(m);
    }
    throw ArgumentError("unknown property: " + property);
  }
};

mpq_class parse_rational(const std::string& text) {
  try {
    mpq_class q(text);
    if (q.get_den() == 0) throw ArgumentError("zero denominator in " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ArgumentError("cannot parse rational: " + text);
  }
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  if (text.empty()) return edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t dash = item.find('-');
    if (dash == std::string::npos)
      throw ArgumentError("edge list items must look like u-v, got: " + item);
    try {
      std::size_t p1 = 0, p2 = 0;
      int u = std::stoi(item.substr(0, dash), &p1);
      int v = std::stoi(item.substr(dash + 1), &p2);
      if (p1 != dash || p2 != item.size() - dash - 1) throw std::invalid_argument(item);
      edges.emplace_back(u, v);
    } catch (const ArgumentError&) {
      throw;
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse edge list item: " + item);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return edges;
}

mpq_class family_density(const ifam::Family& f) {
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), 2, static_cast<unsigned long>(ifam::edge_slots(f.n())));
  mpq_class density(static_cast<unsigned long>(f.size()));
  density /= space;
  density.canonicalize();
  return density;
}

void finish_build(const ifam::Family& family, const std::string& construction,
                  const std::string& out_path, const std::string& json_path) {
  ifam::write_family_file(out_path, family);
  mpq_class density = family_density(family);
  std::cout << "wrote " << out_path << ": " << family.size() << " graphs, density "
            << ifam::render_rational(density) << " (~" << mpq_get_d(density.get_mpq_t())
            << ")\n";
  if (!json_path.empty()) {
    json payload{{"construction", construction},
                 {"n", family.n()},
                 {"size", family.size()},
                 {"density", ifam::json_rational(density)},
                 {"path", out_path}};
    emit_envelope("build", std::move(payload), json_path, "");
  }
}

int run_verify(const std::string& path, const PropertyFlags& flags, bool anticluster,
               const std::string& json_path) {
  ifam::Family family = ifam::read_family_file(path);
  ifam::PropertySpec spec = flags.to_spec();
  ifam::VerifyResult result = ifam::verify_family(family, spec);

  json payload{{"n", family.n()},
               {"family_size", family.size()},
               {"property", spec.describe()},
               {"intersecting", result.intersecting}};
  if (result.witness)
    payload["witness"] =
        json::array({ifam::encode(result.witness->first), ifam::encode(result.witness->second)});
  if (anticluster) payload["anticluster"] = ifam::to_json(ifam::verify_anticluster(family));

  std::string summary = result.intersecting ? "intersecting: yes" : "intersecting: no";
  emit_envelope("verify", std::move(payload), json_path, summary);
  return result.intersecting ? 0 : kExitViolation;
}

void run_search(int n, const PropertyFlags& flags, bool classify, bool brute,
                std::uint64_t budget_nodes, double budget_seconds,
                const std::string& json_path) {
  ifam::PropertySpec spec = flags.to_spec();
  if (classify) {
    auto families = ifam::classify_extremal(n, spec);
    json list = json::array();
    for (const auto& f : families) {
      json members = json::array();
      for (const auto& g : f.sorted_members()) members.push_back(ifam::encode(g));
      list.push_back(std::move(members));
    }
    json payload{{"n", n},
                 {"property", spec.describe()},
                 {"maximum_size", families.empty() ? 0 : families.front().size()},
                 {"family_count", families.size()},
                 {"families", std::move(list)}};
    emit_envelope("classify", std::move(payload), json_path,
                  "maximum families: " + std::to_string(families.size()));
    return;
  }
  ifam::SearchReport report;
  if (brute) {
    report = ifam::brute_force_mu(n, spec);
  } else {
    ifam::SearchBudget budget;
    budget.max_nodes = budget_nodes;
    budget.max_seconds = budget_seconds;
    report = ifam::max_family(n, spec, budget);
  }
  std::string summary = "best size " + std::to_string(report.best_size) +
                        (report.optimal ? " (optimal)" : " (not proven optimal)");
  emit_envelope("search", ifam::to_json(report), json_path, summary);
}

}  // namespace

int main(int argc, char** argv) {
  g_command.assign(argv, argv + argc);
  CLI::App app{"exact toolkit for property-intersecting families of labeled graphs"};
  app.require_subcommand(1);

  std::string json_path;
  app.add_option("--json", json_path, "write the JSON report to this path")->capture_default_str();

  int exit_code = 0;

  // ---- build ----
  auto* build = app.add_subcommand("build", "generate a family file");
  build->require_subcommand(1);

  struct {
    int n = 4;
    std::string tree = "path";
    std::string base;
    std::string out;
  } star_opts;
  auto* star = build->add_subcommand("star", "all supergraphs of a fixed graph");
  star->add_option("--n", star_opts.n, "vertex count")->required();
  star->add_option("--tree", star_opts.tree, "path|star spanning tree shorthand");
  star->add_option("--base", star_opts.base, "explicit base graph encoding");
  star->add_option("--out", star_opts.out, "output family file")->required();
  star->callback([&] {
    ifam::Graph base(star_opts.n);
    if (!star_opts.base.empty()) {
      base = ifam::decode(star_opts.base);
      if (base.n() != star_opts.n) throw ArgumentError("--base encoding does not match --n");
    } else if (star_opts.tree == "path") {
      for (int v = 1; v < star_opts.n; ++v) base.set_edge(v, v + 1);
    } else if (star_opts.tree == "star") {
      for (int v = 2; v <= star_opts.n; ++v) base.set_edge(1, v);
    } else {
      throw ArgumentError("--tree must be path or star (or use --base)");
    }
    finish_build(ifam::star_family(star_opts.n, base), "star", star_opts.out, json_path);
  });

  struct {
    int n = 4;
    std::string a, b, s;
    std::string out;
  } tp_opts;
  auto* treepair = build->add_subcommand("treepair", "two trees plus a majority of odd S");
  treepair->add_option("--n", tp_opts.n, "vertex count")->required();
  treepair->add_option("--a", tp_opts.a, "edge list of tree A, e.g. 1-2")->required();
  treepair->add_option("--b", tp_opts.b, "edge list of tree B, e.g. 3-4")->required();
  treepair->add_option("--s", tp_opts.s, "edge list of the crossing set S")->required();
  treepair->add_option("--out", tp_opts.out, "output family file")->required();
  treepair->callback([&] {
    ifam::TreePairSpec spec{ifam::Graph::from_edges(tp_opts.n, parse_edge_list(tp_opts.a)),
                            ifam::Graph::from_edges(tp_opts.n, parse_edge_list(tp_opts.b)),
                            parse_edge_list(tp_opts.s)};
    finish_build(ifam::treepair_family(spec), "treepair", tp_opts.out, json_path);
  });

  struct {
    std::string out;
  } exc_opts;
  auto* exceptional = build->add_subcommand("exceptional-n4", "4-cycle plus all 5+ edge graphs");
  exceptional->add_option("--out", exc_opts.out, "output family file")->required();
  exceptional->callback(
      [&] { finish_build(ifam::exceptional_n4(), "exceptional-n4", exc_opts.out, json_path); });

  struct {
    std::string family;
    int a = 0, b = 0;
    std::string out;
  } tensor_opts;
  auto* tensor = build->add_subcommand("tensor", "blockwise thresholded family F(a,b)");
  tensor->add_option("--family", tensor_opts.family, "inner family file")->required();
  tensor->add_option("--a", tensor_opts.a, "blocks required in the family")->required();
  tensor->add_option("--b", tensor_opts.b, "total block count")->required();
  tensor->add_option("--out", tensor_opts.out, "output family file")->required();
  tensor->callback([&] {
    ifam::Family inner = ifam::read_family_file(tensor_opts.family);
    finish_build(ifam::tensor_family(inner, tensor_opts.a, tensor_opts.b), "tensor",
                 tensor_opts.out, json_path);
  });

  // ---- verify ----
  struct {
    std::string file;
    PropertyFlags flags;
    bool anticluster = false;
  } verify_opts;
  auto* verify = app.add_subcommand("verify", "check a family file for P-intersection");
  verify->add_option("file", verify_opts.file, "family file")->required();
  verify_opts.flags.attach(verify);
  verify->add_flag("--anticluster", verify_opts.anticluster, "also run the coset certificate");
  verify->callback([&] {
    exit_code = run_verify(verify_opts.file, verify_opts.flags, verify_opts.anticluster, json_path);
  });

  // ---- search ----
  struct {
    int n = 4;
    PropertyFlags flags;
    bool classify = false;
    bool brute = false;
    std::uint64_t budget_nodes = 100'000'000;
    double budget_seconds = 60.0;
  } search_opts;
  auto* search = app.add_subcommand("search", "maximum P-intersecting family search");
  search->add_option("--n", search_opts.n, "vertex count")->required();
  search_opts.flags.attach(search);
  search->add_flag("--classify", search_opts.classify, "enumerate all maximum families (n <= 4)");
  search->add_flag("--brute", search_opts.brute, "unconditional exhaustive engine (n <= 4)");
  search->add_option("--budget-nodes", search_opts.budget_nodes, "node budget");
  search->add_option("--budget-seconds", search_opts.budget_seconds, "time budget");
  search->callback([&] {
    run_search(search_opts.n, search_opts.flags, search_opts.classify, search_opts.brute,
               search_opts.budget_nodes, search_opts.budget_seconds, json_path);
  });

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas");
  bounds->require_subcommand(1);

  struct {
    int edges = 1;
    int n = 4;
    std::string p = "1/8";
    long t = 1;
    long x = 0;
    long m = 1;
    double eps = 0.01;
    int table_n = 0;
    int table_r = 0;
  } b_opts;

  auto emit_bounds = [&](std::vector<ifam::BoundReport> reports, const std::string& summary) {
    emit_envelope("bounds", ifam::to_json(reports), json_path, summary);
  };

  auto* b_trivial = bounds->add_subcommand("trivial", "2^{-|E|} <= density <= 1/2");
  b_trivial->add_option("--edges", b_opts.edges, "pattern edge count")->required();
  b_trivial->callback([&] {
    auto [lo, hi] = ifam::trivial_bounds(b_opts.edges);
    emit_bounds({lo, hi}, "trivial bounds emitted");
  });

  auto* b_connected = bounds->add_subcommand("connected", "exact connected-intersecting density");
  b_connected->add_option("--n", b_opts.n, "vertex count")->required();
  b_connected->callback([&] {
    auto r = ifam::connected_value(b_opts.n);
    emit_bounds({r}, "connected density " + ifam::render_rational(*r.exact));
  });

  auto* b_union = bounds->add_subcommand("union-binomial", "binomial tail lower bound");
  b_union->add_option("--p", b_opts.p, "density as num/den")->required();
  b_union->add_option("--t", b_opts.t, "union copies")->required();
  b_union->add_option("--x", b_opts.x, "slack blocks")->required();
  b_union->callback([&] {
    mpq_class p = parse_rational(b_opts.p);
    auto u = ifam::union_lower_binomial(p, b_opts.t, b_opts.x);
    ifam::BoundReport sum;
    sum.name = "union-binomial-sum";
    sum.parameters = {{"p", ifam::render_rational(p)},
                      {"t", std::to_string(b_opts.t)},
                      {"x", std::to_string(b_opts.x)}};
    sum.exact = u.full_sum;
    sum.approx = mpq_get_d(u.full_sum.get_mpq_t());
    sum.direction = ifam::BoundDirection::Lower;
    ifam::BoundReport term = sum;
    term.name = "union-binomial-term";
    term.exact = u.single_term;
    term.approx = mpq_get_d(u.single_term.get_mpq_t());
    emit_bounds({sum, term}, "binomial sum " + ifam::render_rational(u.full_sum));
  });

  auto* b_bracket = bounds->add_subcommand("union-bracket", "per-t bracket tending to p/(1-p)");
  b_bracket->add_option("--p", b_opts.p, "density as num/den")->required();
  b_bracket->add_option("--t", b_opts.t, "union copies")->required();
  b_bracket->callback([&] {
    mpq_class p = parse_rational(b_opts.p);
    auto r = ifam::union_bracket(p, b_opts.t);
    emit_bounds({ifam::bracket_report(r, p)},
                "bracket " + ifam::json_float(static_cast<double>(r.value)));
  });

  auto* b_entropy = bounds->add_subcommand("entropy-check", "C(m,x) >= 2^{mH(x/m)}/(m+1)");
  b_entropy->add_option("--m", b_opts.m, "total draws")->required();
  b_entropy->add_option("--x", b_opts.x, "successes")->required();
  b_entropy->callback([&] {
    auto c = ifam::entropy_term_check(b_opts.m, b_opts.x);
    ifam::BoundReport r;
    r.name = "entropy-check";
    r.parameters = {{"m", std::to_string(b_opts.m)},
                    {"x", std::to_string(b_opts.x)},
                    {"binomial_side", ifam::render_rational(c.binomial_side)}};
    r.exact = c.entropy_side;
    r.approx = mpq_get_d(c.entropy_side.get_mpq_t());
    r.direction = ifam::BoundDirection::Lower;
    r.note = c.holds ? "holds" : "VIOLATED";
    emit_bounds({r}, std::string("entropy estimate ") + (c.holds ? "holds" : "VIOLATED"));
  });

  auto* b_table = bounds->add_subcommand("table", "known values from the literature");
  b_table->add_option("--n", b_opts.table_n, "include n-parametrized rows");
  b_table->add_option("--r", b_opts.table_r, "include the r-partite row");
  b_table->callback([&] {
    std::optional<int> n_opt, r_opt;
    if (b_opts.table_n > 0) n_opt = b_opts.table_n;
    if (b_opts.table_r > 0) r_opt = b_opts.table_r;
    emit_bounds(ifam::known_values_table(n_opt, r_opt), "table emitted");
  });

  auto* b_threshold =
      bounds->add_subcommand("bracket-threshold", "first sampled t reaching (1-eps) p/(1-p)");
  b_threshold->add_option("--p", b_opts.p, "density as num/den")->required();
  b_threshold->add_option("--eps", b_opts.eps, "relative slack in (0,1)")->required();
  b_threshold->callback([&] {
    mpq_class p = parse_rational(b_opts.p);
    auto samples = ifam::default_threshold_samples();
    auto t = ifam::bracket_threshold(p, b_opts.eps, samples);
    ifam::BoundReport r;
    r.name = "bracket-threshold";
    r.parameters = {{"p", ifam::render_rational(p)},
                    {"eps", ifam::json_float(b_opts.eps)},
                    {"t", t ? std::to_string(*t) : "not reached"}};
    if (t) {
      auto br = ifam::union_bracket(p, *t);
      r.approx = static_cast<double>(br.value);
    }
    r.direction = ifam::BoundDirection::Lower;
    r.note = "smallest sampled t with bracket above the target";
    emit_bounds({r}, t ? "threshold t=" + std::to_string(*t) : "threshold not reached");
  });

  // Let --json appear on either side of the subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (auto* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return exit_code;
}
