#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace egodyn {

/// Parameters of one simulated radar experiment.
struct ExperimentConfig {
  std::uint64_t n = 0;                 ///< node count
  std::uint64_t m = 0;                 ///< edge count
  double lb_fraction = 0.25;           ///< probability a node balances load
  std::uint64_t rewires_per_round = 1; ///< rewires applied at each round boundary
  std::uint64_t rounds = 0;
  std::uint64_t num_destinations = 0;
  std::int64_t round_period_s = 900;   ///< 10 min round + 5 min gap; metadata only
  std::uint64_t seed = 0;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ConfigError naming the first offending field.
void validate(const ExperimentConfig& config);

/// Parses a flat JSON object holding exactly the ExperimentConfig keys.
/// `lb_fraction`, `rewires_per_round` and `round_period_s` may be omitted;
/// everything else is required and unknown keys are rejected. The result is
/// validated.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Fully resolved config as a JSON document with fixed key order, newline-terminated.
std::string to_json(const ExperimentConfig& config);

}  // namespace egodyn
