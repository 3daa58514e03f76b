#include "ifam/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>

namespace ifam {

using nlohmann::json;

json json_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json json_rational(const mpz_class& num, const mpz_class& den) {
  return json{{"num", json_integer(num)}, {"den", json_integer(den)}};
}

json json_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return json_rational(mpz_class(c.get_num()), mpz_class(c.get_den()));
}

std::string json_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

json to_json(const AnticlusterReport& report) {
  json violations = json::array();
  for (const auto& [g1, g2] : report.violations)
    violations.push_back(json::array({encode(g1), encode(g2)}));
  return json{{"family_size", report.family_size},
              {"cosets_hit", report.cosets_hit},
              {"violations", violations},
              {"bound_num", json_integer(report.bound_num)},
              {"bound_den", json_integer(report.bound_den)},
              {"certified", report.certified()}};
}

json to_json(const SearchReport& report) {
  json members = json::array();
  for (const Graph& g : report.best_family.sorted_members()) members.push_back(encode(g));
  return json{{"n", report.n},
              {"property", report.property.describe()},
              {"best_size", report.best_size},
              {"best_family", members},
              {"upper_bound_count", json_integer(report.upper_bound_count)},
              {"upper_bound_density", json_rational(report.upper_bound_density)},
              {"optimal", report.optimal},
              {"nodes_explored", report.nodes_explored},
              {"wall_seconds", json_float(report.wall_seconds)},
              {"budget_exhausted", report.budget_exhausted}};
}

json to_json(const BoundReport& report) {
  json params = json::object();
  for (const auto& [symbol, value] : report.parameters) params[symbol] = value;
  json out{{"name", report.name},
           {"direction", direction_name(report.direction)},
           {"parameters", params},
           {"approx", json_float(report.approx)}};
  out["exact"] = report.exact ? json_rational(*report.exact) : json(nullptr);
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

json to_json(const std::vector<BoundReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

namespace {

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long value = std::strtoll(epoch, &end, 10);
    if (end && *end == '\0') now = static_cast<std::time_t>(value);
  }
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

json make_envelope(const std::string& payload_kind, json payload,
                   const std::vector<std::string>& command) {
  std::string echoed;
  for (std::size_t i = 0; i < command.size(); ++i) {
    if (i > 0) echoed += ' ';
    echoed += command[i];
  }
  return json{{"schema", kSchemaVersion},
              {"tool", kToolName},
              {"version", kToolVersion},
              {"command", echoed},
              {"timestamp", utc_timestamp()},
              {"payload_kind", payload_kind},
              {"payload", std::move(payload)}};
}

}  // namespace ifam
