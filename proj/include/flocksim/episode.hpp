#pragma once

#include <string>
#include <vector>

#include "flocksim/backends.hpp"
#include "flocksim/transcript.hpp"

namespace flocksim {

// Run one episode from explicitly supplied starting positions (replay hands
// in the recorded ones; the normal path draws them from the trial seed).
Transcript run_episode_from(const ExperimentConfig& cfg, int trial_index,
                            std::uint64_t seed, std::vector<Vec2> initial_positions,
                            const BackendMap& backends);

// Draw initial positions uniformly in the configured square and run.
Transcript run_episode(const ExperimentConfig& cfg, int trial_index,
                       const BackendMap& backends);

struct MatrixResult {
  std::vector<Transcript> transcripts;
  std::vector<std::string> transcript_paths;  // empty when not persisted
};

// Aggregate statistics over one batch.
struct MatrixAggregate {
  int trials = 0;
  int failed_trials = 0;
  std::vector<std::pair<std::string, int>> outcome_counts;  // label -> trials
  // Per-round MAE envelope across completed trials.
  std::vector<double> mae_mean, mae_min, mae_max;
  long long api_calls = 0;
  long long format_failures = 0;
};

MatrixAggregate aggregate_matrix(const std::vector<Transcript>& transcripts);
std::string render_aggregate(const MatrixAggregate& agg);

// Run `trials` episodes with seeds seed, seed+1, ...; persist each transcript
// and its CSVs under out_dir/<config name>/ when out_dir is non-empty. An
// unreachable endpoint fails that trial and the batch continues.
MatrixResult run_matrix(const ExperimentConfig& cfg, const ChatClientFactory& chat_factory,
                        const std::string& out_dir);

}  // namespace flocksim
