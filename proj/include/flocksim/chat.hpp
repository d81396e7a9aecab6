#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flocksim/prompts.hpp"

namespace flocksim {

// Network-level or protocol-level failure talking to an endpoint; distinct
// from a response that arrived but could not be parsed as a position.
struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChatOptions {
  std::string model = "gpt-3.5-turbo";
  std::optional<double> temperature;
  std::optional<int> max_tokens;
};

struct ChatCompletion {
  std::string text;
  long prompt_tokens = 0;
  long completion_tokens = 0;
};

class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual ChatCompletion complete(const std::vector<ChatMessage>& messages) = 0;
  // Live clients talk to a real endpoint; their timing and token usage are
  // worth recording. Deterministic clients are not.
  virtual bool is_live() const = 0;
};

struct ChatEndpoint {
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key;  // sent as a bearer token when non-empty
  int timeout_seconds = 60;
};

// Speaks the common chat-completions convention: POST {base_url}/chat/completions
// with a model id and role-tagged messages; reads choices[0].message.content.
class HttpChatClient : public ChatClient {
 public:
  HttpChatClient(ChatEndpoint endpoint, ChatOptions options);
  ChatCompletion complete(const std::vector<ChatMessage>& messages) override;
  bool is_live() const override { return true; }

 private:
  ChatEndpoint endpoint_;
  ChatOptions options_;
};

// Serves a fixed list of assistant texts in order; used by tests and by
// transcript replay. Throws TransportError when the list runs out.
class ScriptedChatClient : public ChatClient {
 public:
  explicit ScriptedChatClient(std::vector<std::string> responses)
      : responses_(std::move(responses)) {}
  ChatCompletion complete(const std::vector<ChatMessage>& messages) override;
  bool is_live() const override { return false; }
  size_t served() const { return next_; }

 private:
  std::vector<std::string> responses_;
  size_t next_ = 0;
};

}  // namespace flocksim
