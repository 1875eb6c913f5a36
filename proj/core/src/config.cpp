#include "egodyn/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string_view>

#include "egodyn/error.hpp"

namespace egodyn {

namespace {

using nlohmann::json;

std::uint64_t read_unsigned(const json& j, const char* field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected a non-negative integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw ConfigError(field, "expected a non-negative integer (got " + std::to_string(v) + ")");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

void validate(const ExperimentConfig& c) {
  if (c.n < 2) throw ConfigError("n", "must be >= 2 (got " + std::to_string(c.n) + ")");
  if (c.n > 0xffffffffULL) throw ConfigError("n", "must fit 32-bit node ids");
  const std::uint64_t max_edges = c.n * (c.n - 1) / 2;
  if (c.m + 1 < c.n || c.m > max_edges) {
    throw ConfigError("m", "must satisfy n-1 <= m <= n(n-1)/2 = " + std::to_string(max_edges) + " (got " +
                               std::to_string(c.m) + ")");
  }
  if (!(c.lb_fraction >= 0.0 && c.lb_fraction <= 1.0)) throw ConfigError("lb_fraction", "must lie in [0, 1]");
  if (c.rounds < 1) throw ConfigError("rounds", "must be >= 1");
  if (c.num_destinations < 1) throw ConfigError("num_destinations", "must be >= 1");
  if (c.num_destinations > c.n - 1) {
    throw ConfigError("num_destinations", "must be <= n-1 = " + std::to_string(c.n - 1) + " (got " +
                                              std::to_string(c.num_destinations) + ")");
  }
  if (c.rewires_per_round > 0 && max_edges == c.m) {
    throw ConfigError("rewires_per_round", "must be 0 when the graph is complete (m = n(n-1)/2)");
  }
  if (c.round_period_s < 0) throw ConfigError("round_period_s", "must be >= 0");
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParameterError("config must be a JSON object");

  ExperimentConfig c;
  bool seen_n = false, seen_m = false, seen_rounds = false, seen_dest = false, seen_seed = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n") {
      c.n = read_unsigned(value, "n");
      seen_n = true;
    } else if (key == "m") {
      c.m = read_unsigned(value, "m");
      seen_m = true;
    } else if (key == "lb_fraction") {
      if (!value.is_number()) throw ConfigError(key, "expected a number");
      c.lb_fraction = value.get<double>();
    } else if (key == "rewires_per_round") {
      c.rewires_per_round = read_unsigned(value, "rewires_per_round");
    } else if (key == "rounds") {
      c.rounds = read_unsigned(value, "rounds");
      seen_rounds = true;
    } else if (key == "num_destinations") {
      c.num_destinations = read_unsigned(value, "num_destinations");
      seen_dest = true;
    } else if (key == "round_period_s") {
      if (!value.is_number_integer()) throw ConfigError(key, "expected an integer");
      c.round_period_s = value.get<std::int64_t>();
    } else if (key == "seed") {
      c.seed = read_unsigned(value, "seed");
      seen_seed = true;
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  if (!seen_n) throw ConfigError("n", "missing");
  if (!seen_m) throw ConfigError("m", "missing");
  if (!seen_rounds) throw ConfigError("rounds", "missing");
  if (!seen_dest) throw ConfigError("num_destinations", "missing");
  if (!seen_seed) throw ConfigError("seed", "missing");
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["lb_fraction"] = c.lb_fraction;
  j["rewires_per_round"] = c.rewires_per_round;
  j["rounds"] = c.rounds;
  j["num_destinations"] = c.num_destinations;
  j["round_period_s"] = c.round_period_s;
  j["seed"] = c.seed;
  return j.dump(2) + "\n";
}

}  // namespace egodyn
