#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "flocksim/episode.hpp"
#include "flocksim/plot.hpp"
#include "flocksim/replay.hpp"
#include "flocksim/report.hpp"

using namespace flocksim;

namespace {

// "--backend spec" overrides every agent; "--backend id=spec" one agent.
void apply_backend_flags(ExperimentConfig& cfg, const std::vector<std::string>& flags) {
  for (const auto& flag : flags) {
    const size_t eq = flag.find('=');
    if (eq == std::string::npos) {
      cfg.default_backend = flag;
      cfg.backend_overrides.clear();
    } else {
      cfg.backend_overrides[std::stoi(flag.substr(0, eq))] = flag.substr(eq + 1);
    }
  }
}

int cmd_run(const std::string& config_arg, std::optional<std::uint64_t> seed,
            const std::vector<std::string>& backend_flags, std::string out_dir,
            std::optional<int> trials) {
  ExperimentConfig cfg = resolve_config(config_arg);
  if (seed) cfg.seed = *seed;
  if (trials) cfg.trials = *trials;
  apply_backend_flags(cfg, backend_flags);
  if (out_dir.empty()) out_dir = cfg.out_dir;
  validate_config(cfg);

  bool uses_chat = cfg.default_backend == "chat";
  for (const auto& [id, spec] : cfg.backend_overrides) uses_chat |= spec == "chat";
  if (uses_chat && !std::getenv(cfg.chat.api_key_env.c_str()))
    std::cerr << "note: " << cfg.chat.api_key_env
              << " is not set; requests will be sent without credentials\n";

  const MatrixResult result = run_matrix(cfg, live_chat_factory(cfg), out_dir);
  for (const auto& path : result.transcript_paths) std::cout << "wrote " << path << "\n";
  std::cout << render_aggregate(aggregate_matrix(result.transcripts));
  return 0;
}

int cmd_replay(const std::string& transcript_path) {
  const Transcript original = read_transcript(transcript_path);
  const Transcript replayed = replay_transcript(original);

  std::filesystem::path p(transcript_path);
  const std::string regenerated = (p.parent_path() / (p.stem().string() + "_replay_trajectory.csv")).string();
  write_trajectory_csv(replayed, regenerated);
  std::cout << "wrote " << regenerated << "\n";

  const std::string original_csv =
      (p.parent_path() / (p.stem().string() + "_trajectory.csv")).string();
  if (std::ifstream in(original_csv, std::ios::binary); in.good()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() == trajectory_csv_text(replayed)) {
      std::cout << "replay matches " << original_csv << " byte for byte\n";
    } else {
      std::cout << "replay DIFFERS from " << original_csv << "\n";
      return 1;
    }
  }
  std::cout << "outcome: " << to_string(replayed.outcome.label) << " ("
            << replayed.outcome.evidence << ")\n";
  return 0;
}

int cmd_plot(const std::string& transcript_path, const std::string& out) {
  const Transcript t = read_transcript(transcript_path);
  const auto [traj, mae] = write_plots(t, out);
  std::cout << "wrote " << traj << "\nwrote " << mae << "\n";
  return 0;
}

int cmd_report(const std::string& dir) {
  std::cout << write_report(dir);
  std::cout << "wrote " << (std::filesystem::path(dir) / "report.txt").string() << "\n";
  std::cout << "wrote " << (std::filesystem::path(dir) / "summary.json").string() << "\n";
  return 0;
}

// Resolve a preset or file, validate it, and print the canonical JSON — the
// easiest way to produce an editable config template.
int cmd_config(const std::string& config_arg) {
  ExperimentConfig cfg = resolve_config(config_arg);
  validate_config(cfg);
  std::cout << config_to_json(cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based flocking simulator and evaluation harness"};
  app.require_subcommand(1);

  std::string config_arg, out_dir, transcript_path, plot_out, report_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::vector<std::string> backend_flags;

  auto* run = app.add_subcommand("run", "Run a batch of trials");
  run->add_option("--config", config_arg,
                  "Config file path or preset name (circle5x5, triangle3x5, pair10, "
                  "pair10-one-stationary)")
      ->required();
  run->add_option("--seed", seed, "Override the root seed");
  run->add_option("--trials", trials, "Override the trial count");
  run->add_option("--backend", backend_flags,
                  "Backend override: \"<spec>\" for all agents or \"<id>=<spec>\"; spec is "
                  "oracle, chat, or scripted:<kind>");
  run->add_option("--out", out_dir, "Output directory (default from config)");

  auto* replay = app.add_subcommand("replay", "Re-simulate a transcript and verify it");
  replay->add_option("transcript", transcript_path, "Transcript (.jsonl)")->required();

  auto* plot = app.add_subcommand("plot", "Render trajectory and MAE panels");
  plot->add_option("transcript", transcript_path, "Transcript (.jsonl)")->required();
  plot->add_option("--out", plot_out, "Output stem or .svg path")->required();

  auto* report = app.add_subcommand("report", "Aggregate all transcripts in a directory");
  report->add_option("dir", report_dir, "Directory containing *.jsonl transcripts")
      ->required();

  std::string config_show;
  auto* config = app.add_subcommand("config", "Print a config as canonical JSON");
  config->add_option("config", config_show, "Config file path or preset name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_arg, seed, backend_flags, out_dir, trials);
    if (replay->parsed()) return cmd_replay(transcript_path);
    if (plot->parsed()) return cmd_plot(transcript_path, plot_out);
    if (report->parsed()) return cmd_report(report_dir);
    if (config->parsed()) return cmd_config(config_show);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
