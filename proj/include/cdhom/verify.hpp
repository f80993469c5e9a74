#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdhom/representation.hpp"

namespace cdhom {

struct VerifyConfig {
  ModelParams params;
  int truncation = 60;
  double r_max = 0.5;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;
};

struct CheckRecord {
  std::string name;
  std::string suite;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  double residual = 0.0; // NaN when the check could not be evaluated
  double tolerance = 0.0;
  bool pass = false;
  std::string diagnostic;
};

/// Suites accepted by run_verification, in execution order.
const std::vector<std::string> &suite_names();

/// Default tolerance for every check name.
const std::map<std::string, double> &default_tolerances();

/// Runs "all" or one named suite. ConfigError for an unknown suite or an
/// unknown tolerance override. Failures of the normalization machinery
/// (degenerate parameters) are recorded in the check, not thrown.
std::vector<CheckRecord> run_verification(const VerifyConfig &config,
                                          const std::string &suite);

} // namespace cdhom
