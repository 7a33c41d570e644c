#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cauchy::cli {

struct CheckRow {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteConfig {
  std::size_t n = 256;
  std::optional<double> tol;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

/// Runs a named verification suite. Throws UsageError for unknown names.
std::vector<CheckRow> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace cauchy::cli
