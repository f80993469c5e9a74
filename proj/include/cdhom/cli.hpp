#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdhom/types.hpp"
#include "cdhom/verify.hpp"

namespace cdhom {

enum ExitCode : int {
  exit_pass = 0,
  exit_verification_failure = 1,
  exit_domain_error = 2,
  exit_config_error = 3,
};

/// Accepts "a", "bi", "a+bi", "a-bi", "i" and "(a,b)". ConfigError otherwise.
cplx parse_complex(const std::string &text);

/// Comma-separated reals. ConfigError on empty or malformed entries.
std::vector<double> parse_real_list(const std::string &text);

nlohmann::ordered_json complex_json(cplx z);

nlohmann::ordered_json report_json(const VerifyConfig &config,
                                   const std::string &suite,
                                   const std::vector<CheckRecord> &records);
std::string report_csv(const std::vector<CheckRecord> &records);

/// Entry point of the cdhom tool. Returns the process exit code.
int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace cdhom
