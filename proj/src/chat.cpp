#include "flocksim/chat.hpp"

#include <httplib.h>
#include <json.hpp>

namespace flocksim {

namespace {

using nlohmann::json;

// Split "scheme://host[:port]" from the path prefix.
std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
  const size_t scheme = base_url.find("://");
  if (scheme == std::string::npos)
    throw TransportError("base_url must start with http:// or https://");
  const size_t path = base_url.find('/', scheme + 3);
  if (path == std::string::npos) return {base_url, ""};
  std::string prefix = base_url.substr(path);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base_url.substr(0, path), prefix};
}

}  // namespace

HttpChatClient::HttpChatClient(ChatEndpoint endpoint, ChatOptions options)
    : endpoint_(std::move(endpoint)), options_(std::move(options)) {}

ChatCompletion HttpChatClient::complete(const std::vector<ChatMessage>& messages) {
  json body;
  body["model"] = options_.model;
  body["messages"] = json::array();
  for (const auto& m : messages)
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  if (options_.temperature) body["temperature"] = *options_.temperature;
  if (options_.max_tokens) body["max_tokens"] = *options_.max_tokens;

  const auto [host, prefix] = split_base_url(endpoint_.base_url);
  httplib::Client client(host);
  client.set_connection_timeout(endpoint_.timeout_seconds, 0);
  client.set_read_timeout(endpoint_.timeout_seconds, 0);
  httplib::Headers headers;
  if (!endpoint_.api_key.empty())
    headers.emplace("Authorization", "Bearer " + endpoint_.api_key);

  const auto res =
      client.Post(prefix + "/chat/completions", headers, body.dump(), "application/json");
  if (!res)
    throw TransportError("endpoint unreachable: " + endpoint_.base_url + " (" +
                         httplib::to_string(res.error()) + ")");
  if (res->status < 200 || res->status >= 300)
    throw TransportError("endpoint returned HTTP " + std::to_string(res->status) + ": " +
                         res->body.substr(0, 200));

  json parsed;
  try {
    parsed = json::parse(res->body);
  } catch (const json::exception& e) {
    throw TransportError(std::string("endpoint returned invalid document: ") + e.what());
  }
  if (!parsed.contains("choices") || !parsed["choices"].is_array() ||
      parsed["choices"].empty() || !parsed["choices"][0].contains("message") ||
      !parsed["choices"][0]["message"].contains("content"))
    throw TransportError("endpoint response missing choices[0].message.content");

  ChatCompletion out;
  out.text = parsed["choices"][0]["message"]["content"].get<std::string>();
  if (parsed.contains("usage") && parsed["usage"].is_object()) {
    out.prompt_tokens = parsed["usage"].value("prompt_tokens", 0L);
    out.completion_tokens = parsed["usage"].value("completion_tokens", 0L);
  }
  return out;
}

ChatCompletion ScriptedChatClient::complete(const std::vector<ChatMessage>&) {
  if (next_ >= responses_.size())
    throw TransportError("scripted chat client has no responses left");
  return {responses_[next_++], 0, 0};
}

}  // namespace flocksim
