#pragma once

// Named, reproducible checks and their line-delimited JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liecheck/rootsys.hpp"

namespace liecheck {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct ScenarioParams {
  std::string name;
  std::optional<RootKind> kind;
  std::optional<int> rank;
  std::optional<std::uint32_t> p;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> budget;
  std::string cochar = "highest-root";
};

const std::vector<std::string>& scenario_registry();
std::size_t registry_index(const std::string& name);  // throws UsageError for unknown names
std::string scenario_claim(const std::string& name);

// Status strings: "pass", "fail", "escalate", "not-applicable".
bool status_is_failure(const std::string& status);

// Runs one scenario. Usage problems raise UsageError or PreconditionError,
// budget overruns raise ResourceError; everything else is report content.
nlohmann::json run_scenario(const ScenarioParams& params);

// Same report with timing fields removed, for comparisons.
nlohmann::json strip_timing(nlohmann::json report);

// Exit code for a batch of reports: 0 all non-failing, 1 otherwise.
int exit_code_for(const std::vector<nlohmann::json>& reports);

}  // namespace liecheck
