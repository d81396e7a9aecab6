#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "flocksim/config.hpp"
#include "flocksim/llm_agent.hpp"
#include "flocksim/scripted.hpp"
#include "flocksim/world.hpp"

namespace flocksim {

// The pluggable brain of one agent.
class DecisionMaker {
 public:
  virtual ~DecisionMaker() = default;
  virtual DecisionDetail decide(const WorldState& state) = 0;
  virtual std::string name() const = 0;

  virtual long api_calls() const { return 0; }
  virtual long format_failures() const { return 0; }
  virtual long prompt_tokens() const { return 0; }
  virtual long completion_tokens() const { return 0; }
  virtual bool live() const { return false; }
};

using BackendMap = std::map<int, std::shared_ptr<DecisionMaker>>;

// Builds a chat client for one agent; injected so tests and replay can
// substitute deterministic endpoints for the live HTTP one.
using ChatClientFactory = std::function<std::shared_ptr<ChatClient>(int agent_id)>;

// Reads the API key from the configured environment variable and talks HTTP.
ChatClientFactory live_chat_factory(const ExperimentConfig& cfg);

std::shared_ptr<DecisionMaker> make_backend(const std::string& spec, int agent_id,
                                            const ExperimentConfig& cfg,
                                            const ChatClientFactory& chat_factory);

// One backend per non-stationary agent, per the config's backend table.
BackendMap make_backends(const ExperimentConfig& cfg, const ChatClientFactory& chat_factory);

}  // namespace flocksim
