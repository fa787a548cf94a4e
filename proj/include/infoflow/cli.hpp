#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace infoflow {

struct RunConfig {
  double log_base = 2.0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool strict = false;  // randomized commands then require an explicit seed
  std::optional<std::uint64_t> work_budget;
  std::string output_dir;  // --out-dir, else $INFOFLOW_OUTPUT_DIR, else cwd
  double density_tolerance = 0.01;
  double slope_threshold = 0.25;

  std::uint64_t sets_budget() const { return work_budget.value_or(1'000'000); }
  std::uint64_t node_budget() const { return work_budget.value_or(std::uint64_t(1) << 30); }
};

// Exit codes: 0 success, 1 invalid input, 2 budget exhaustion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infoflow
