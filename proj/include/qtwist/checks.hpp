// Named verification checks, their configuration, JSON reports and the
// replay of recorded counterexamples.
#pragma once

#include "qtwist/cartan.hpp"
#include "qtwist/property.hpp"
#include "qtwist/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtwist {

/// Bad check name, type, bound or variant.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckConfig {
  std::string check;
  std::string type = "A2";  // "A2", or a bare letter combined with rank
  int rank = 0;
  int deg = 3;
  int trials = 25;
  std::uint64_t seed = 1;
  std::string variant;  // check-specific; empty picks the default
  std::vector<std::string> modules{"w1"};
  int cap = 6;
  std::string out;
};

struct CheckInfo {
  std::string name;
  std::string anchor;
  std::vector<std::string> variants;  // first entry is the default
};

/// The eleven checks in catalog order.
const std::vector<CheckInfo>& list_checks();

/// Cartan datum named by type and rank; throws ConfigError.
CartanDatum resolve_cartan(const CheckConfig& config);
/// Throws ConfigError on anything run_check would refuse.
void validate(const CheckConfig& config);

struct CheckReport {
  CheckConfig config;
  std::string status;  // "pass", "fail" or "error"
  Report report;
  std::string error;
  double seconds = 0;
};

/// Validates (ConfigError escapes), then runs; other exceptions become
/// status "error".
CheckReport run_check(const CheckConfig& config);

nlohmann::json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

/// Every registered property, across all modules.
const std::vector<Property>& all_properties();
/// The algebra spec a counterexample was evaluated over ("rs", "q", "rs-prime").
SpecPtr spec_by_name(const CartanDatum& cartan, const std::string& name);
/// Re-evaluates the recorded property on the recorded inputs.
std::string replay(const Counterexample& c);

}  // namespace qtwist
