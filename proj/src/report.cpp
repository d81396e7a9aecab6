#include "flocksim/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace flocksim {

using nlohmann::json;

std::vector<Transcript> load_transcripts(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw TranscriptError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw TranscriptError("no transcripts (*.jsonl) under " + dir);
  std::vector<Transcript> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(read_transcript(f.string()));
  return out;
}

std::vector<ScenarioReport> build_report(const std::vector<Transcript>& transcripts) {
  std::map<std::string, ScenarioReport> by_digest;
  std::map<std::string, double> mae_sums;
  std::map<std::string, int> mae_counts;
  std::vector<std::string> order;
  for (const auto& t : transcripts) {
    const std::string digest = config_digest(t.config);
    if (!by_digest.count(digest)) {
      order.push_back(digest);
      by_digest[digest].name = t.config.name;
      by_digest[digest].config_digest = digest;
    }
    ScenarioReport& s = by_digest[digest];
    ++s.trials;
    if (t.failed) ++s.failed_trials;
    ++s.outcome_counts[to_string(t.outcome.label)];
    s.api_calls += t.api_calls;
    s.format_failures += t.format_failures;
    if (!t.failed) {
      mae_sums[digest] += t.final_mae();
      ++mae_counts[digest];
    }
  }
  std::vector<ScenarioReport> out;
  for (const auto& digest : order) {
    ScenarioReport s = by_digest[digest];
    s.mean_final_mae = mae_counts[digest] ? mae_sums[digest] / mae_counts[digest] : 0.0;
    s.parse_failures_per_100_calls =
        s.api_calls ? 100.0 * static_cast<double>(s.format_failures) /
                          static_cast<double>(s.api_calls)
                    : 0.0;
    s.episode_failure_pct = 100.0 * s.failed_trials / s.trials;
    out.push_back(std::move(s));
  }
  return out;
}

std::string render_report(const std::vector<ScenarioReport>& scenarios) {
  std::ostringstream out;
  out << "scenario              trials  outcomes                        "
         "mean final MAE  parse fail/100  episode fail%  digest\n";
  out << "--------------------  ------  ------------------------------  "
         "--------------  --------------  -------------  ----------------\n";
  for (const auto& s : scenarios) {
    std::string outcomes;
    for (const auto& [label, n] : s.outcome_counts) {
      if (!outcomes.empty()) outcomes += " ";
      char frag[48];
      std::snprintf(frag, sizeof frag, "%s:%d%%", label.c_str(),
                    static_cast<int>(100.0 * n / s.trials + 0.5));
      outcomes += frag;
    }
    char row[256];
    std::snprintf(row, sizeof row, "%-20s  %6d  %-30s  %14.4f  %14.2f  %13.1f  %s\n",
                  s.name.c_str(), s.trials, outcomes.c_str(), s.mean_final_mae,
                  s.parse_failures_per_100_calls, s.episode_failure_pct,
                  s.config_digest.c_str());
    out << row;
  }
  return out.str();
}

std::string report_summary_json(const std::vector<ScenarioReport>& scenarios) {
  json arr = json::array();
  for (const auto& s : scenarios) {
    json o;
    o["name"] = s.name;
    o["config_digest"] = s.config_digest;
    o["trials"] = s.trials;
    o["failed_trials"] = s.failed_trials;
    o["outcomes"] = s.outcome_counts;
    o["mean_final_mae"] = s.mean_final_mae;
    o["api_calls"] = s.api_calls;
    o["format_failures"] = s.format_failures;
    o["parse_failures_per_100_calls"] = s.parse_failures_per_100_calls;
    o["episode_failure_pct"] = s.episode_failure_pct;
    arr.push_back(std::move(o));
  }
  return json{{"scenarios", std::move(arr)}}.dump(2) + "\n";
}

std::string write_report(const std::string& dir) {
  const auto scenarios = build_report(load_transcripts(dir));
  const std::string text = render_report(scenarios);
  namespace fs = std::filesystem;
  {
    std::ofstream f(fs::path(dir) / "report.txt", std::ios::binary);
    if (!f) throw TranscriptError("cannot write report.txt under " + dir);
    f << text;
  }
  {
    std::ofstream f(fs::path(dir) / "summary.json", std::ios::binary);
    if (!f) throw TranscriptError("cannot write summary.json under " + dir);
    f << report_summary_json(scenarios);
  }
  return text;
}

}  // namespace flocksim
