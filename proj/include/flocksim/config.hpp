#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flocksim/alpha_lattice.hpp"
#include "flocksim/formations.hpp"
#include "flocksim/llm_agent.hpp"
#include "flocksim/world.hpp"

namespace flocksim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChatSettings {
  std::string base_url = "https://api.openai.com/v1";
  std::string model = "gpt-3.5-turbo";
  std::string api_key_env = "OPENAI_API_KEY";  // only the variable NAME is configured
  std::optional<double> temperature;
  std::optional<int> max_tokens;
  int timeout_seconds = 60;
  std::string history = "full";  // "full" | "window"
  int window_rounds = 4;
  bool include_velocities = false;
};

struct OracleSettings {
  double sigma_eps = 0.1;
  double bump_h = 0.2;
  double phi_a = 5.0;
  double phi_b = 5.0;
  double range_multiplier = 1.2;  // interaction range as a multiple of spacing
  std::optional<double> interaction_range;  // absolute override
  int substeps = 20;
  double dt = 0.05;
  double approach_step_cap = 2.5;
};

OracleFlockerSettings to_oracle_flocker(const OracleSettings& s, double desired_distance);

// Everything one batch of trials needs: world bounds, formation target,
// per-agent decision backends, endpoint parameters, seeds, and output policy.
struct ExperimentConfig {
  int schema_version = 1;
  std::string name = "experiment";
  FormationSpec formation;  // carries agent_count
  double init_low = -20.0;  // initial positions i.i.d. uniform in the square
  double init_high = 20.0;
  MotionLimits limits;
  int rounds = 25;
  int trials = 10;
  std::uint64_t seed = 42;
  std::string default_backend = "oracle";  // "oracle" | "scripted:<kind>" | "chat"
  std::map<int, std::string> backend_overrides;
  std::map<int, std::string> personalities;  // agent id -> stubborn|suggestible
  std::vector<int> stationary_ids;
  OracleSettings oracle;
  ChatSettings chat;
  RetryPolicy retry;
  bool strict = false;  // fail the episode on an unparseable round
  std::string out_dir = "runs";

  std::string backend_for(int agent_id) const;
};

inline std::uint64_t trial_seed(const ExperimentConfig& cfg, int trial_index) {
  return cfg.seed + static_cast<std::uint64_t>(trial_index);
}

void validate_config(const ExperimentConfig& cfg);  // throws ConfigError

std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const std::string& text);

void save_config(const ExperimentConfig& cfg, const std::string& path);
ExperimentConfig load_config(const std::string& path);

std::vector<std::string> preset_names();
ExperimentConfig preset_config(const std::string& name);

// A file path if it exists, otherwise a preset name.
ExperimentConfig resolve_config(const std::string& path_or_preset);

// Stable 16-hex-digit digest of the canonical config document.
std::string config_digest(const ExperimentConfig& cfg);

}  // namespace flocksim
