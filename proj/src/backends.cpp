#include "flocksim/backends.hpp"

#include <algorithm>
#include <cstdlib>

namespace flocksim {

namespace {

class ScriptedBackend : public DecisionMaker {
 public:
  ScriptedBackend(int agent_id, ScriptedSettings settings, MotionLimits limits,
                  std::string label)
      : agent_id_(agent_id), settings_(settings), limits_(limits), label_(std::move(label)) {}

  DecisionDetail decide(const WorldState& state) override {
    DecisionDetail d;
    d.decision = scripted_decide(agent_id_, state, limits_, settings_);
    return d;
  }
  std::string name() const override { return label_; }

 private:
  int agent_id_;
  ScriptedSettings settings_;
  MotionLimits limits_;
  std::string label_;
};

class ChatBackend : public DecisionMaker {
 public:
  ChatBackend(std::unique_ptr<LlmAgent> agent) : agent_(std::move(agent)) {}

  DecisionDetail decide(const WorldState& state) override { return agent_->decide(state); }
  std::string name() const override { return "chat"; }
  long api_calls() const override { return agent_->api_calls(); }
  long format_failures() const override { return agent_->format_failures(); }
  long prompt_tokens() const override { return agent_->prompt_tokens(); }
  long completion_tokens() const override { return agent_->completion_tokens(); }
  bool live() const override { return agent_->live(); }

 private:
  std::unique_ptr<LlmAgent> agent_;
};

}  // namespace

ChatClientFactory live_chat_factory(const ExperimentConfig& cfg) {
  return [cfg](int) -> std::shared_ptr<ChatClient> {
    ChatEndpoint endpoint;
    endpoint.base_url = cfg.chat.base_url;
    endpoint.timeout_seconds = cfg.chat.timeout_seconds;
    if (const char* key = std::getenv(cfg.chat.api_key_env.c_str())) endpoint.api_key = key;
    ChatOptions options;
    options.model = cfg.chat.model;
    options.temperature = cfg.chat.temperature;
    options.max_tokens = cfg.chat.max_tokens;
    return std::make_shared<HttpChatClient>(endpoint, options);
  };
}

std::shared_ptr<DecisionMaker> make_backend(const std::string& spec, int agent_id,
                                            const ExperimentConfig& cfg,
                                            const ChatClientFactory& chat_factory) {
  const auto oracle_settings =
      to_oracle_flocker(cfg.oracle, cfg.formation.desired_distance);
  if (spec == "oracle") {
    ScriptedSettings s;
    s.kind = ScriptedKind::OracleFlockerWrapper;
    s.oracle = oracle_settings;
    return std::make_shared<ScriptedBackend>(agent_id, s, cfg.limits, "oracle");
  }
  if (spec.rfind("scripted:", 0) == 0) {
    ScriptedSettings s;
    s.kind = scripted_kind_from_name(spec.substr(9));
    s.oracle = oracle_settings;
    return std::make_shared<ScriptedBackend>(agent_id, s, cfg.limits, spec);
  }
  if (spec == "chat") {
    LlmAgentSettings s;
    s.retry = cfg.retry;
    if (cfg.strict) s.retry.on_exhaustion = RetryPolicy::OnExhaustion::FailEpisode;
    s.history = cfg.chat.history == "window" ? HistoryMode::Window : HistoryMode::Full;
    s.window_rounds = cfg.chat.window_rounds;
    s.include_velocities = cfg.chat.include_velocities;
    s.shape_name = to_string(cfg.formation.shape);
    if (auto it = cfg.personalities.find(agent_id); it != cfg.personalities.end())
      s.personality = personality_from_name(it->second);
    return std::make_shared<ChatBackend>(
        std::make_unique<LlmAgent>(agent_id, s, cfg.limits, chat_factory(agent_id)));
  }
  throw ConfigError("unknown backend: " + spec);
}

BackendMap make_backends(const ExperimentConfig& cfg, const ChatClientFactory& chat_factory) {
  BackendMap out;
  for (int id = 0; id < cfg.formation.agent_count; ++id) {
    const bool stationary = std::find(cfg.stationary_ids.begin(), cfg.stationary_ids.end(),
                                      id) != cfg.stationary_ids.end();
    if (stationary) continue;
    out[id] = make_backend(cfg.backend_for(id), id, cfg, chat_factory);
  }
  return out;
}

}  // namespace flocksim
