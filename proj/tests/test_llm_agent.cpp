#include <doctest.h>

#include <memory>

#include "flocksim/llm_agent.hpp"

using namespace flocksim;

namespace {

WorldState three_agents() { return make_world({{0, 0}, {10, 0}, {0, 10}}); }

// A client that fails transport a fixed number of times before delegating.
class FlakyClient : public ChatClient {
 public:
  FlakyClient(int failures, std::shared_ptr<ChatClient> inner)
      : failures_(failures), inner_(std::move(inner)) {}
  ChatCompletion complete(const std::vector<ChatMessage>& messages) override {
    if (failures_-- > 0) throw TransportError("connection reset");
    return inner_->complete(messages);
  }
  bool is_live() const override { return false; }

 private:
  int failures_;
  std::shared_ptr<ChatClient> inner_;
};

// Records every outgoing message list, then serves canned texts.
class RecordingClient : public ChatClient {
 public:
  explicit RecordingClient(std::vector<std::string> responses)
      : inner_(std::move(responses)) {}
  ChatCompletion complete(const std::vector<ChatMessage>& messages) override {
    sent.push_back(messages);
    return inner_.complete(messages);
  }
  bool is_live() const override { return false; }
  std::vector<std::vector<ChatMessage>> sent;

 private:
  ScriptedChatClient inner_;
};

}  // namespace

TEST_CASE("first call sends the briefing, later calls send round updates") {
  auto client = std::make_shared<RecordingClient>(std::vector<std::string>{
      "Reasoning: a. Position: [1.00, 1.00]", "Reasoning: b. Position: [2.00, 2.00]"});
  LlmAgent agent(0, LlmAgentSettings{}, MotionLimits{}, client);

  auto w = three_agents();
  const DecisionDetail d1 = agent.decide(w);
  CHECK(d1.decision.target == Vec2(1, 1));
  CHECK(d1.attempts == 1);
  CHECK_FALSE(d1.held);
  REQUIRE(client->sent.size() == 1);
  REQUIRE(client->sent[0].size() == 1);
  CHECK(client->sent[0][0].role == "user");
  // The briefing carries the rules; round updates do not.
  CHECK(client->sent[0][0].content.find("maximum velocity is") != std::string::npos);
  CHECK(client->sent[0][0].content.find("Strictly follow") != std::string::npos);

  w.agents[0].position = Vec2(1, 1);
  const DecisionDetail d2 = agent.decide(w);
  CHECK(d2.decision.target == Vec2(2, 2));
  REQUIRE(client->sent.size() == 2);
  REQUIRE(client->sent[1].size() == 3);  // briefing, reply, round update
  CHECK(client->sent[1][1].role == "assistant");
  CHECK(client->sent[1][2].content.find("You have now moved to: [1.00, 1.00]") !=
        std::string::npos);
  CHECK(client->sent[1][2].content.find("Strictly follow") == std::string::npos);

  CHECK(agent.api_calls() == 2);
  CHECK(agent.format_failures() == 0);
  CHECK_FALSE(agent.live());
}

TEST_CASE("other agents are listed in ascending id order regardless of storage") {
  auto client = std::make_shared<RecordingClient>(
      std::vector<std::string>{"Position: [0.00, 0.00]"});
  LlmAgent agent(1, LlmAgentSettings{}, MotionLimits{}, client);
  WorldState w = make_world({{1, 1}, {2, 2}, {3, 3}});
  std::swap(w.agents[0], w.agents[2]);  // storage order 2,1,0
  (void)agent.decide(w);
  const std::string& text = client->sent[0][0].content;
  // Agent 1 sees agents 0 then 2.
  const size_t p0 = text.find("[1.00, 1.00]");
  const size_t p2 = text.find("[3.00, 3.00]");
  REQUIRE(p0 != std::string::npos);
  REQUIRE(p2 != std::string::npos);
  CHECK(p0 < p2);
}

TEST_CASE("malformed replies trigger a verbatim corrective reminder") {
  auto client = std::make_shared<RecordingClient>(std::vector<std::string>{
      "I shall move somewhere nice.",                 // no marker
      "Position: [not, numbers]",                     // malformed
      "Reasoning: third try. Position: [4.00, 4.00]"  // good
  });
  LlmAgentSettings s;
  s.retry.max_attempts = 3;
  LlmAgent agent(0, s, MotionLimits{}, client);
  const DecisionDetail d = agent.decide(three_agents());
  CHECK(d.decision.target == Vec2(4, 4));
  CHECK(d.attempts == 3);
  CHECK(d.parse_failures == 2);
  CHECK_FALSE(d.held);
  REQUIRE(d.raw_attempts.size() == 3);
  CHECK(d.raw_attempts[0] == "I shall move somewhere nice.");

  // Conversation: briefing, bad, reminder, bad, reminder, good = 6 messages.
  REQUIRE(agent.conversation().size() == 6);
  CHECK(agent.conversation()[2].role == "user");
  CHECK(agent.conversation()[2].content == PromptTemplates::defaults().output_format);
  CHECK(agent.conversation()[4].content == PromptTemplates::defaults().output_format);
  CHECK(agent.format_failures() == 2);
  CHECK(agent.api_calls() == 3);
}

TEST_CASE("exhausted retries hold position under the default policy") {
  auto client = std::make_shared<ScriptedChatClient>(
      std::vector<std::string>{"nope", "still nope", "never"});
  LlmAgentSettings s;
  s.retry.max_attempts = 3;
  LlmAgent agent(2, s, MotionLimits{}, client);
  auto w = three_agents();
  const DecisionDetail d = agent.decide(w);
  CHECK(d.held);
  CHECK(d.decision.target == Vec2(0, 10));  // own position
  CHECK(d.attempts == 3);
  CHECK(d.parse_failures == 3);
  CHECK(agent.format_failures() == 3);
}

TEST_CASE("strict policy raises a typed failure naming the agent") {
  auto client =
      std::make_shared<ScriptedChatClient>(std::vector<std::string>{"no", "no"});
  LlmAgentSettings s;
  s.retry.max_attempts = 2;
  s.retry.on_exhaustion = RetryPolicy::OnExhaustion::FailEpisode;
  LlmAgent agent(1, s, MotionLimits{}, client);
  auto w = three_agents();
  try {
    (void)agent.decide(w);
    FAIL("expected FormatFailure");
  } catch (const FormatFailure& f) {
    CHECK(f.agent_id == 1);
    CHECK(std::string(f.what()).find("agent 1") != std::string::npos);
  }
}

TEST_CASE("transport errors are retried and eventually rethrown") {
  SUBCASE("recovers within budget") {
    auto inner = std::make_shared<ScriptedChatClient>(
        std::vector<std::string>{"Position: [1.00, 2.00]"});
    auto client = std::make_shared<FlakyClient>(2, inner);
    LlmAgentSettings s;
    s.retry.max_attempts = 3;
    LlmAgent agent(0, s, MotionLimits{}, client);
    const DecisionDetail d = agent.decide(three_agents());
    CHECK(d.decision.target == Vec2(1, 2));
    CHECK(d.attempts == 1);  // only the successful completion counts
  }
  SUBCASE("persistent outage propagates") {
    auto inner = std::make_shared<ScriptedChatClient>(std::vector<std::string>{});
    auto client = std::make_shared<FlakyClient>(99, inner);
    LlmAgentSettings s;
    s.retry.max_attempts = 3;
    LlmAgent agent(0, s, MotionLimits{}, client);
    auto w = three_agents();
    CHECK_THROWS_AS((void)agent.decide(w), TransportError);
  }
}

TEST_CASE("windowed history keeps the briefing plus recent rounds only") {
  std::vector<std::string> replies;
  for (int i = 0; i < 10; ++i)
    replies.push_back("Position: [" + std::to_string(i) + ".00, 0.00]");
  auto client = std::make_shared<RecordingClient>(replies);
  LlmAgentSettings s;
  s.history = HistoryMode::Window;
  s.window_rounds = 2;
  LlmAgent agent(0, s, MotionLimits{}, client);
  auto w = three_agents();
  for (int i = 0; i < 10; ++i) (void)agent.decide(w);

  // Full log grows without bound...
  CHECK(agent.conversation().size() == 20);
  // ...but the wire payload caps at briefing + 2*window messages.
  const auto& last_sent = client->sent.back();
  CHECK(last_sent.size() == 1 + 2 * 2);
  CHECK(last_sent[0].content.find("maximum velocity is") != std::string::npos);
  // The tail is the most recent history, ending with the new round update
  // (the reply that followed it is appended after the send).
  CHECK(last_sent.back().content ==
        agent.conversation()[agent.conversation().size() - 2].content);
  // Early sends below the cap are unwindowed.
  CHECK(client->sent[0].size() == 1);
  CHECK(client->sent[1].size() == 3);
}

TEST_CASE("settings are validated on construction") {
  auto client = std::make_shared<ScriptedChatClient>(std::vector<std::string>{});
  LlmAgentSettings s;
  s.retry.max_attempts = 0;
  CHECK_THROWS_AS(LlmAgent(0, s, MotionLimits{}, client), std::invalid_argument);
  s = LlmAgentSettings{};
  s.history = HistoryMode::Window;
  s.window_rounds = 0;
  CHECK_THROWS_AS(LlmAgent(0, s, MotionLimits{}, client), std::invalid_argument);
}
