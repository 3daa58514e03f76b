#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "ifam/bounds.hpp"
#include "ifam/cosets.hpp"
#include "ifam/search.hpp"

namespace ifam {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "ifam";
inline constexpr const char* kToolVersion = "0.1.0";

// Exact rationals render as {num, den}; integers wider than 64 bits fall back
// to decimal strings.  Floats render as decimal strings with 17 significant
// digits.
nlohmann::json json_integer(const mpz_class& z);
nlohmann::json json_rational(const mpq_class& q);
nlohmann::json json_rational(const mpz_class& num, const mpz_class& den);
std::string json_float(double value);

nlohmann::json to_json(const AnticlusterReport& report);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const std::vector<BoundReport>& reports);

/// Wraps a payload in the versioned envelope.  The timestamp is UTC now,
/// or SOURCE_DATE_EPOCH when that variable is set (reproducible output).
nlohmann::json make_envelope(const std::string& payload_kind, nlohmann::json payload,
                             const std::vector<std::string>& command);

}  // namespace ifam
