#include "flocksim/episode.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "flocksim/rng.hpp"

namespace flocksim {

Transcript run_episode_from(const ExperimentConfig& cfg, int trial_index,
                            std::uint64_t seed, std::vector<Vec2> initial_positions,
                            const BackendMap& backends) {
  validate_config(cfg);
  if (static_cast<int>(initial_positions.size()) != cfg.formation.agent_count)
    throw std::invalid_argument("initial position count does not match agent count");
  for (int id = 0; id < cfg.formation.agent_count; ++id) {
    const bool stationary = std::find(cfg.stationary_ids.begin(), cfg.stationary_ids.end(),
                                      id) != cfg.stationary_ids.end();
    if (!stationary && !backends.count(id))
      throw std::invalid_argument("no backend for active agent " + std::to_string(id));
  }

  Transcript t;
  t.config = cfg;
  t.trial_index = trial_index;
  t.trial_seed = seed;
  t.initial_positions = initial_positions;
  for (const auto& [id, backend] : backends) t.backends[id] = backend->name();

  const double d = cfg.formation.desired_distance;
  WorldState world = make_world(initial_positions, cfg.stationary_ids);
  t.series.append(world.positions(), d);

  const auto t0 = std::chrono::steady_clock::now();
  for (int round = 1; round <= cfg.rounds; ++round) {
    std::map<int, Decision> decisions;
    std::map<int, DecisionDetail> details;
    try {
      // All decisions observe the same pre-round snapshot.
      for (const auto& [id, backend] : backends) {
        DecisionDetail detail = backend->decide(world);
        decisions[id] = detail.decision;
        details[id] = std::move(detail);
      }
    } catch (const FormatFailure& e) {
      t.failed = true;
      t.failure_round = world.round;
      t.failure_reason = e.what();
      break;
    } catch (const TransportError& e) {
      t.failed = true;
      t.failure_round = world.round;
      t.failure_reason = e.what();
      break;
    }

    auto [next, record] = step_world(world, decisions, cfg.limits);
    for (auto& log : record.agents) {
      auto it = details.find(log.agent_id);
      if (it == details.end()) continue;
      log.attempts = it->second.attempts;
      log.parse_failures = it->second.parse_failures;
      log.held = it->second.held;
      log.raw_attempts = std::move(it->second.raw_attempts);
    }
    world = std::move(next);
    t.series.append(world.positions(), d);
    t.rounds.push_back(std::move(record));
  }
  const auto t1 = std::chrono::steady_clock::now();

  for (const auto& [id, backend] : backends) {
    t.api_calls += backend->api_calls();
    t.format_failures += backend->format_failures();
    t.prompt_tokens += backend->prompt_tokens();
    t.completion_tokens += backend->completion_tokens();
    t.live = t.live || backend->live();
  }
  // Timing is only meaningful (and only recorded) for live-endpoint runs;
  // deterministic runs must serialize identically across invocations.
  t.wall_ms = t.live
                  ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  : 0;

  if (t.series.size() >= 5) {
    t.outcome = classify_outcome(t.series, cfg.formation);
  } else {
    t.outcome = {Outcome::Inconclusive, "episode too short to classify"};
  }
  return t;
}

Transcript run_episode(const ExperimentConfig& cfg, int trial_index,
                       const BackendMap& backends) {
  validate_config(cfg);
  const std::uint64_t seed = trial_seed(cfg, trial_index);
  Rng rng(seed);
  std::vector<Vec2> positions;
  positions.reserve(cfg.formation.agent_count);
  for (int i = 0; i < cfg.formation.agent_count; ++i) {
    const double x = rng.uniform(cfg.init_low, cfg.init_high);
    const double y = rng.uniform(cfg.init_low, cfg.init_high);
    positions.emplace_back(x, y);
  }
  return run_episode_from(cfg, trial_index, seed, std::move(positions), backends);
}

MatrixAggregate aggregate_matrix(const std::vector<Transcript>& transcripts) {
  MatrixAggregate agg;
  agg.trials = static_cast<int>(transcripts.size());
  std::map<std::string, int> counts;
  size_t longest = 0;
  for (const auto& t : transcripts) {
    if (t.failed) ++agg.failed_trials;
    ++counts[to_string(t.outcome.label)];
    agg.api_calls += t.api_calls;
    agg.format_failures += t.format_failures;
    if (!t.failed) longest = std::max(longest, t.series.size());
  }
  for (const auto& [label, n] : counts) agg.outcome_counts.emplace_back(label, n);
  for (size_t k = 0; k < longest; ++k) {
    double sum = 0, lo = 0, hi = 0;
    int n = 0;
    for (const auto& t : transcripts) {
      if (t.failed || k >= t.series.size()) continue;
      const double m = t.series.per_round[k].mae;
      if (n == 0) lo = hi = m;
      lo = std::min(lo, m);
      hi = std::max(hi, m);
      sum += m;
      ++n;
    }
    if (n == 0) break;
    agg.mae_mean.push_back(sum / n);
    agg.mae_min.push_back(lo);
    agg.mae_max.push_back(hi);
  }
  return agg;
}

std::string render_aggregate(const MatrixAggregate& agg) {
  std::ostringstream out;
  out << "trials: " << agg.trials << " (" << agg.failed_trials << " failed)\n";
  out << "outcomes:";
  for (const auto& [label, n] : agg.outcome_counts)
    out << " " << label << "=" << n;
  out << "\n";
  if (!agg.mae_mean.empty()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "final MAE mean %.4f (min %.4f, max %.4f)\n",
                  agg.mae_mean.back(), agg.mae_min.back(), agg.mae_max.back());
    out << buf;
  }
  if (agg.api_calls > 0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "format failures: %lld per %lld calls (%.1f%%)\n",
                  agg.format_failures, agg.api_calls,
                  100.0 * agg.format_failures / agg.api_calls);
    out << buf;
  }
  return out.str();
}

MatrixResult run_matrix(const ExperimentConfig& cfg, const ChatClientFactory& chat_factory,
                        const std::string& out_dir) {
  validate_config(cfg);
  MatrixResult result;
  std::filesystem::path dir;
  if (!out_dir.empty()) {
    dir = std::filesystem::path(out_dir) / cfg.name;
    std::filesystem::create_directories(dir);
  }
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const BackendMap backends = make_backends(cfg, chat_factory);
    Transcript t = run_episode(cfg, trial, backends);
    if (!out_dir.empty()) {
      char stem[32];
      std::snprintf(stem, sizeof stem, "trial_%02d", trial);
      const auto base = dir / stem;
      write_transcript(t, base.string() + ".jsonl");
      write_trajectory_csv(t, base.string() + "_trajectory.csv");
      write_metrics_csv(t, base.string() + "_metrics.csv");
      result.transcript_paths.push_back(base.string() + ".jsonl");
    }
    result.transcripts.push_back(std::move(t));
  }
  return result;
}

}  // namespace flocksim
