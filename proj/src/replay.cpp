#include "flocksim/replay.hpp"

#include "flocksim/backends.hpp"
#include "flocksim/episode.hpp"

namespace flocksim {

namespace {

// Re-issues the decisions recorded for one agent, round by round.
class StoredDecisionBackend : public DecisionMaker {
 public:
  StoredDecisionBackend(std::string label, std::vector<DecisionDetail> rounds)
      : label_(std::move(label)), rounds_(std::move(rounds)) {}

  DecisionDetail decide(const WorldState&) override {
    if (next_ >= rounds_.size())
      throw TransportError("transcript has no decision recorded for this round");
    return rounds_[next_++];
  }
  std::string name() const override { return label_; }

 private:
  std::string label_;
  std::vector<DecisionDetail> rounds_;
  size_t next_ = 0;
};

DecisionDetail detail_from_log(const AgentRoundLog& log) {
  DecisionDetail d;
  d.decision.target = log.requested_target;
  d.decision.reasoning = log.reasoning;
  d.raw_attempts = log.raw_attempts;
  d.attempts = log.attempts;
  d.parse_failures = log.parse_failures;
  d.held = log.held;
  return d;
}

}  // namespace

Transcript replay_transcript(const Transcript& original) {
  const ExperimentConfig& cfg = original.config;
  BackendMap backends;
  for (const auto& [id, name] : original.backends) {
    if (name == "chat") {
      // Feed the stored assistant texts back through the live decision path.
      std::vector<std::string> raws;
      for (const auto& r : original.rounds)
        for (const auto& log : r.agents)
          if (log.agent_id == id)
            raws.insert(raws.end(), log.raw_attempts.begin(), log.raw_attempts.end());
      auto factory = [raws](int) {
        return std::make_shared<ScriptedChatClient>(raws);
      };
      backends[id] = make_backend("chat", id, cfg, factory);
    } else {
      std::vector<DecisionDetail> details;
      for (const auto& r : original.rounds)
        for (const auto& log : r.agents)
          if (log.agent_id == id) details.push_back(detail_from_log(log));
      backends[id] = std::make_shared<StoredDecisionBackend>(name, std::move(details));
    }
  }
  return run_episode_from(cfg, original.trial_index, original.trial_seed,
                          original.initial_positions, backends);
}

Transcript replay_file(const std::string& path) {
  return replay_transcript(read_transcript(path));
}

}  // namespace flocksim
