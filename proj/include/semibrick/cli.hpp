#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semibrick/serialize.hpp"

namespace semibrick::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string command;
  std::string preset = "a2";
  std::vector<std::string> vertices;  // explicit quiver; overrides the preset when non-empty
  std::vector<Quiver::ArrowSpec> arrows;
  std::uint64_t p = 2;
  std::vector<std::size_t> bound;  // empty: preset default; one entry: broadcast
  Structure structure = Structure::Standard;
  std::uint64_t ceiling = kDefaultEnumerationCeiling;
  std::uint64_t tuple_budget = kDefaultTupleBudget;
  std::uint64_t node_budget = kDefaultNodeBudget;
  SearchMode search = SearchMode::Pruned;
  int workers = 0;
  std::string out = "-";
  std::vector<std::uint32_t> bricks;   // filt
  std::vector<std::uint32_t> classes;  // wide-check
};

/// Applies a JSON config document; keys mirror the long flag names.
void apply_config_json(RunConfig& cfg, const Json& j);

std::shared_ptr<const Quiver> build_quiver(const RunConfig& cfg);
DimVector resolve_bound(const RunConfig& cfg, const Quiver& q);

/// Runs one command and returns the report; `exit_code` receives the verdict code.
Json run_command(const RunConfig& cfg, int& exit_code, std::ostream& log);

/// Full entry point: parses argv, writes the report, maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semibrick::cli
