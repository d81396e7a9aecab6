#pragma once

#include <map>
#include <string>
#include <vector>

#include "flocksim/transcript.hpp"

namespace flocksim {

// Aggregated view of one scenario (all transcripts sharing a config digest).
struct ScenarioReport {
  std::string name;
  std::string config_digest;
  int trials = 0;
  int failed_trials = 0;
  std::map<std::string, int> outcome_counts;
  double mean_final_mae = 0.0;  // over completed trials
  long long api_calls = 0;
  long long format_failures = 0;
  // Raw parse-failure rate (per 100 endpoint calls) and episode failure rate
  // are reported separately: a retried-then-recovered response counts in the
  // former but not the latter.
  double parse_failures_per_100_calls = 0.0;
  double episode_failure_pct = 0.0;
};

// Read every *.jsonl transcript under dir (recursively, in path order).
std::vector<Transcript> load_transcripts(const std::string& dir);

std::vector<ScenarioReport> build_report(const std::vector<Transcript>& transcripts);

std::string render_report(const std::vector<ScenarioReport>& scenarios);
std::string report_summary_json(const std::vector<ScenarioReport>& scenarios);

// Writes <dir>/report.txt and <dir>/summary.json; returns the rendered table.
std::string write_report(const std::string& dir);

}  // namespace flocksim
