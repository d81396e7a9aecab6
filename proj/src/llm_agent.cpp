#include "flocksim/llm_agent.hpp"

#include <algorithm>

namespace flocksim {

LlmAgent::LlmAgent(int agent_id, LlmAgentSettings settings, MotionLimits limits,
                   std::shared_ptr<ChatClient> client)
    : agent_id_(agent_id),
      settings_(std::move(settings)),
      limits_(limits),
      client_(std::move(client)) {
  if (settings_.retry.max_attempts < 1)
    throw std::invalid_argument("retry max_attempts must be >= 1");
  if (settings_.history == HistoryMode::Window && settings_.window_rounds < 1)
    throw std::invalid_argument("window_rounds must be >= 1");
}

// Under the sliding window, send the opening briefing plus the most recent
// exchanges; the full log is still kept locally for the transcript.
std::vector<ChatMessage> LlmAgent::outgoing_messages() const {
  if (settings_.history == HistoryMode::Full) return conversation_;
  const size_t keep = 2 * static_cast<size_t>(settings_.window_rounds);
  if (conversation_.size() <= 1 + keep) return conversation_;
  std::vector<ChatMessage> out;
  out.push_back(conversation_.front());
  out.insert(out.end(), conversation_.end() - keep, conversation_.end());
  return out;
}

DecisionDetail LlmAgent::decide(const WorldState& state) {
  const AgentState& self = state.agent(agent_id_);
  std::vector<AgentState> others;
  for (const auto& a : state.agents)
    if (a.id != agent_id_) others.push_back(a);
  std::sort(others.begin(), others.end(),
            [](const AgentState& a, const AgentState& b) { return a.id < b.id; });

  if (conversation_.empty()) {
    conversation_.push_back(initial_prompt_message(
        settings_.templates, settings_.personality, self, others, limits_,
        settings_.shape_name, settings_.include_velocities));
  } else {
    conversation_.push_back(round_prompt_message(settings_.templates, self, others,
                                                 settings_.include_velocities));
  }

  DecisionDetail detail;
  int transport_failures = 0;
  while (true) {
    ChatCompletion completion;
    try {
      completion = client_->complete(outgoing_messages());
    } catch (const TransportError&) {
      if (++transport_failures >= settings_.retry.max_attempts) throw;
      continue;
    }
    ++api_calls_;
    ++detail.attempts;
    prompt_tokens_ += completion.prompt_tokens;
    completion_tokens_ += completion.completion_tokens;
    conversation_.push_back({"assistant", completion.text});
    detail.raw_attempts.push_back(completion.text);

    const ParseResult parsed = parse_response(completion.text);
    if (parsed.ok()) {
      detail.decision.target = parsed.value->target;
      detail.decision.reasoning = parsed.value->reasoning;
      return detail;
    }

    ++format_failures_;
    ++detail.parse_failures;
    if (detail.attempts >= settings_.retry.max_attempts) break;
    // Corrective nudge: restate the format contract verbatim.
    conversation_.push_back({"user", settings_.templates.output_format});
  }

  if (settings_.retry.on_exhaustion == RetryPolicy::OnExhaustion::FailEpisode)
    throw FormatFailure(agent_id_,
                        "agent " + std::to_string(agent_id_) + " produced no parseable "
                        "position in " + std::to_string(detail.attempts) + " attempts");
  detail.held = true;
  detail.decision.target = self.position;
  detail.decision.reasoning = "";
  return detail;
}

}  // namespace flocksim
