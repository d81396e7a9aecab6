#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flocksim/config.hpp"
#include "flocksim/metrics.hpp"
#include "flocksim/world.hpp"

namespace flocksim {

struct TranscriptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kTranscriptSchemaVersion = 1;

// The replayable record of one episode: everything needed to regenerate the
// trajectories byte-for-byte, including every assistant text verbatim.
struct Transcript {
  int schema_version = kTranscriptSchemaVersion;
  ExperimentConfig config;
  int trial_index = 0;
  std::uint64_t trial_seed = 0;
  std::map<int, std::string> backends;  // resolved per-agent backend names
  std::vector<Vec2> initial_positions;
  std::vector<RoundRecord> rounds;
  MetricSeries series;  // entry 0 is the initial state
  OutcomeLabel outcome;
  bool failed = false;
  int failure_round = -1;
  std::string failure_reason;
  long long api_calls = 0;
  long long format_failures = 0;
  // Populated only when a live endpoint was involved, so that deterministic
  // runs stay byte-identical across invocations.
  bool live = false;
  long long prompt_tokens = 0;
  long long completion_tokens = 0;
  long long wall_ms = 0;

  double final_mae() const { return series.per_round.back().mae; }
};

// Line-delimited records: a header with the config snapshot, one record per
// round, and a closing summary.
void write_transcript(const Transcript& t, const std::string& path);
Transcript read_transcript(const std::string& path);

// Fixed-point coordinate text used by the CSV exports (stable digits so
// identical values always produce identical bytes).
std::string csv_number(double v);

// One row per agent per round (round 0 = initial state):
// round,agent_id,x,y,clamped,min_dist — min_dist is the agent's distance to
// its nearest peer after the move.
void write_trajectory_csv(const Transcript& t, const std::string& path);
std::string trajectory_csv_text(const Transcript& t);

// One row per round: round,mae,min_dist,max_dist,spread.
void write_metrics_csv(const Transcript& t, const std::string& path);
std::string metrics_csv_text(const Transcript& t);

}  // namespace flocksim
