#include "flocksim/transcript.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace flocksim {

using nlohmann::json;

namespace {

json vec_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

Vec2 vec_from(const json& j) { return Vec2(j.at(0).get<double>(), j.at(1).get<double>()); }

json positions_json(const std::vector<Vec2>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(vec_json(p));
  return out;
}

std::vector<Vec2> positions_from(const json& j) {
  std::vector<Vec2> out;
  for (const auto& e : j) out.push_back(vec_from(e));
  return out;
}

json round_json(const RoundRecord& r) {
  json agents = json::array();
  for (const auto& a : r.agents) {
    json e;
    e["id"] = a.agent_id;
    e["pre"] = vec_json(a.position_before);
    e["target"] = vec_json(a.requested_target);
    e["post"] = vec_json(a.position_after);
    e["vel"] = vec_json(a.velocity);
    e["clamped"] = a.clamped;
    e["stationary"] = a.stationary;
    e["held"] = a.held;
    e["attempts"] = a.attempts;
    e["parse_failures"] = a.parse_failures;
    e["reasoning"] = a.reasoning;
    e["raw"] = a.raw_attempts;
    agents.push_back(std::move(e));
  }
  json violations = json::array();
  for (const auto& [i, j2] : r.safe_distance_violations)
    violations.push_back(json::array({i, j2}));
  return {{"type", "round"},
          {"round", r.round},
          {"agents", std::move(agents)},
          {"min_pairwise", r.min_pairwise_distance},
          {"violations", std::move(violations)}};
}

RoundRecord round_from(const json& j) {
  RoundRecord r;
  r.round = j.at("round").get<int>();
  for (const auto& e : j.at("agents")) {
    AgentRoundLog a;
    a.agent_id = e.at("id").get<int>();
    a.position_before = vec_from(e.at("pre"));
    a.requested_target = vec_from(e.at("target"));
    a.position_after = vec_from(e.at("post"));
    a.velocity = vec_from(e.at("vel"));
    a.clamped = e.at("clamped").get<bool>();
    a.stationary = e.at("stationary").get<bool>();
    a.held = e.at("held").get<bool>();
    a.attempts = e.at("attempts").get<int>();
    a.parse_failures = e.at("parse_failures").get<int>();
    a.reasoning = e.at("reasoning").get<std::string>();
    a.raw_attempts = e.at("raw").get<std::vector<std::string>>();
    r.agents.push_back(std::move(a));
  }
  r.min_pairwise_distance = j.at("min_pairwise").get<double>();
  for (const auto& v : j.at("violations"))
    r.safe_distance_violations.emplace_back(v.at(0).get<int>(), v.at(1).get<int>());
  return r;
}

json metrics_json(const RoundMetrics& m) {
  return {{"mae", m.mae},
          {"min_dist", m.min_distance},
          {"max_dist", m.max_distance},
          {"centroid", vec_json(m.centroid)},
          {"spread", m.spread}};
}

}  // namespace

void write_transcript(const Transcript& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TranscriptError("cannot write transcript: " + path);

  json backends = json::object();
  for (const auto& [id, name] : t.backends) backends[std::to_string(id)] = name;
  json header = {{"type", "header"},
                 {"schema_version", t.schema_version},
                 {"config", json::parse(config_to_json(t.config))},
                 {"trial_index", t.trial_index},
                 {"trial_seed", t.trial_seed},
                 {"backends", std::move(backends)},
                 {"initial_positions", positions_json(t.initial_positions)}};
  out << header.dump() << "\n";

  for (size_t k = 0; k < t.rounds.size(); ++k) {
    json line = round_json(t.rounds[k]);
    // series entry k+1 belongs to the state after round k+1
    line["metrics"] = metrics_json(t.series.per_round.at(k + 1));
    out << line.dump() << "\n";
  }

  json summary = {{"type", "summary"},
                  {"outcome", to_string(t.outcome.label)},
                  {"evidence", t.outcome.evidence},
                  {"failed", t.failed},
                  {"failure_round", t.failure_round},
                  {"failure_reason", t.failure_reason},
                  {"final_mae", t.final_mae()},
                  {"api_calls", t.api_calls},
                  {"format_failures", t.format_failures},
                  {"live", t.live},
                  {"prompt_tokens", t.prompt_tokens},
                  {"completion_tokens", t.completion_tokens},
                  {"wall_ms", t.wall_ms}};
  out << summary.dump() << "\n";
}

Transcript read_transcript(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TranscriptError("cannot read transcript: " + path);

  Transcript t;
  std::string line;
  bool have_header = false, have_summary = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw TranscriptError("transcript " + path + " line " + std::to_string(lineno) +
                            " is not valid JSON: " + e.what());
    }
    const std::string type = j.value("type", "");
    try {
      if (type == "header") {
        const int version = j.at("schema_version").get<int>();
        if (version != kTranscriptSchemaVersion)
          throw TranscriptError("transcript schema_version " + std::to_string(version) +
                                " unsupported (this build reads " +
                                std::to_string(kTranscriptSchemaVersion) + ")");
        t.schema_version = version;
        t.config = config_from_json(j.at("config").dump());
        t.trial_index = j.at("trial_index").get<int>();
        t.trial_seed = j.at("trial_seed").get<std::uint64_t>();
        for (auto it = j.at("backends").begin(); it != j.at("backends").end(); ++it)
          t.backends[std::stoi(it.key())] = it.value().get<std::string>();
        t.initial_positions = positions_from(j.at("initial_positions"));
        t.series.append(t.initial_positions, t.config.formation.desired_distance);
        have_header = true;
      } else if (type == "round") {
        if (!have_header) throw TranscriptError("round record before header in " + path);
        RoundRecord r = round_from(j);
        std::vector<Vec2> pos;
        for (const auto& a : r.agents) pos.push_back(a.position_after);
        t.series.append(pos, t.config.formation.desired_distance);
        t.rounds.push_back(std::move(r));
      } else if (type == "summary") {
        if (!have_header) throw TranscriptError("summary before header in " + path);
        t.outcome.label = outcome_from_name(j.at("outcome").get<std::string>());
        t.outcome.evidence = j.at("evidence").get<std::string>();
        t.failed = j.at("failed").get<bool>();
        t.failure_round = j.at("failure_round").get<int>();
        t.failure_reason = j.at("failure_reason").get<std::string>();
        t.api_calls = j.at("api_calls").get<long long>();
        t.format_failures = j.at("format_failures").get<long long>();
        t.live = j.at("live").get<bool>();
        t.prompt_tokens = j.at("prompt_tokens").get<long long>();
        t.completion_tokens = j.at("completion_tokens").get<long long>();
        t.wall_ms = j.at("wall_ms").get<long long>();
        have_summary = true;
      } else {
        throw TranscriptError("unknown record type '" + type + "' in " + path);
      }
    } catch (const json::exception& e) {
      throw TranscriptError("transcript " + path + " line " + std::to_string(lineno) +
                            " malformed: " + e.what());
    }
  }
  if (!have_header) throw TranscriptError("transcript has no header record: " + path);
  if (!have_summary)
    throw TranscriptError("transcript is truncated (no summary record): " + path);
  return t;
}

std::string csv_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

namespace {

// Distance from positions[i] to its nearest peer.
double nearest_distance(const std::vector<Vec2>& positions, size_t i) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < positions.size(); ++j)
    if (j != i) best = std::min(best, (positions[j] - positions[i]).norm());
  return best;
}

}  // namespace

std::string trajectory_csv_text(const Transcript& t) {
  std::ostringstream out;
  out << "round,agent_id,x,y,clamped,min_dist\n";
  for (size_t i = 0; i < t.initial_positions.size(); ++i)
    out << "0," << i << "," << csv_number(t.initial_positions[i].x()) << ","
        << csv_number(t.initial_positions[i].y()) << ",0,"
        << csv_number(nearest_distance(t.initial_positions, i)) << "\n";
  for (const auto& r : t.rounds) {
    std::vector<Vec2> pos;
    for (const auto& a : r.agents) pos.push_back(a.position_after);
    for (size_t i = 0; i < r.agents.size(); ++i) {
      const auto& a = r.agents[i];
      out << r.round << "," << a.agent_id << "," << csv_number(a.position_after.x()) << ","
          << csv_number(a.position_after.y()) << "," << (a.clamped ? 1 : 0) << ","
          << csv_number(nearest_distance(pos, i)) << "\n";
    }
  }
  return out.str();
}

void write_trajectory_csv(const Transcript& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TranscriptError("cannot write trajectory csv: " + path);
  out << trajectory_csv_text(t);
}

std::string metrics_csv_text(const Transcript& t) {
  std::ostringstream out;
  out << "round,mae,min_dist,max_dist,spread\n";
  for (size_t k = 0; k < t.series.size(); ++k) {
    const auto& m = t.series.per_round[k];
    out << k << "," << csv_number(m.mae) << "," << csv_number(m.min_distance) << ","
        << csv_number(m.max_distance) << "," << csv_number(m.spread) << "\n";
  }
  return out.str();
}

void write_metrics_csv(const Transcript& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TranscriptError("cannot write metrics csv: " + path);
  out << metrics_csv_text(t);
}

}  // namespace flocksim
