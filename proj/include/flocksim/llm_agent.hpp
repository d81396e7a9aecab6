#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flocksim/chat.hpp"
#include "flocksim/prompts.hpp"
#include "flocksim/response_parse.hpp"
#include "flocksim/world.hpp"

namespace flocksim {

struct RetryPolicy {
  int max_attempts = 3;
  enum class OnExhaustion { HoldPosition, FailEpisode } on_exhaustion =
      OnExhaustion::HoldPosition;
};

// Raised when the retry budget is spent under the fail-episode policy.
struct FormatFailure : std::runtime_error {
  int agent_id;
  FormatFailure(int id, const std::string& what)
      : std::runtime_error(what), agent_id(id) {}
};

enum class HistoryMode { Full, Window };

struct LlmAgentSettings {
  PromptTemplates templates = PromptTemplates::defaults();
  Personality personality = Personality::None;
  RetryPolicy retry;
  HistoryMode history = HistoryMode::Full;
  int window_rounds = 4;  // rounds kept when history == Window
  bool include_velocities = false;
  std::string shape_name = "circle";
};

// A decision together with the evidence of how it was obtained.
struct DecisionDetail {
  Decision decision;
  std::vector<std::string> raw_attempts;  // every assistant text, last is final
  int attempts = 0;
  int parse_failures = 0;
  bool held = false;  // retries exhausted, holding current position
};

// One agent's private conversation with a chat endpoint. The first call sends
// the full game briefing; later calls send position updates. Malformed
// replies get a corrective reminder and a bounded number of retries.
class LlmAgent {
 public:
  LlmAgent(int agent_id, LlmAgentSettings settings, MotionLimits limits,
           std::shared_ptr<ChatClient> client);

  DecisionDetail decide(const WorldState& state);

  int agent_id() const { return agent_id_; }
  const std::vector<ChatMessage>& conversation() const { return conversation_; }
  long api_calls() const { return api_calls_; }
  long format_failures() const { return format_failures_; }
  long prompt_tokens() const { return prompt_tokens_; }
  long completion_tokens() const { return completion_tokens_; }
  bool live() const { return client_->is_live(); }

 private:
  std::vector<ChatMessage> outgoing_messages() const;

  int agent_id_;
  LlmAgentSettings settings_;
  MotionLimits limits_;
  std::shared_ptr<ChatClient> client_;
  std::vector<ChatMessage> conversation_;
  long api_calls_ = 0;
  long format_failures_ = 0;
  long prompt_tokens_ = 0;
  long completion_tokens_ = 0;
};

}  // namespace flocksim
