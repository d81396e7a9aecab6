#include "flocksim/config.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flocksim/scripted.hpp"

namespace flocksim {

using nlohmann::json;

OracleFlockerSettings to_oracle_flocker(const OracleSettings& s, double desired_distance) {
  OracleFlockerSettings out;
  out.alpha.sigma_eps = s.sigma_eps;
  out.alpha.bump_h = s.bump_h;
  out.alpha.phi_a = s.phi_a;
  out.alpha.phi_b = s.phi_b;
  out.alpha.lattice_distance = desired_distance;
  out.alpha.interaction_range =
      s.interaction_range ? *s.interaction_range : s.range_multiplier * desired_distance;
  out.substeps = s.substeps;
  out.dt = s.dt;
  out.approach_step_cap = s.approach_step_cap;
  return out;
}

std::string ExperimentConfig::backend_for(int agent_id) const {
  auto it = backend_overrides.find(agent_id);
  return it != backend_overrides.end() ? it->second : default_backend;
}

namespace {

bool known_backend(const std::string& spec) {
  if (spec == "oracle" || spec == "chat") return true;
  if (spec.rfind("scripted:", 0) == 0) {
    try {
      scripted_kind_from_name(spec.substr(9));
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return false;
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  std::vector<std::string> problems;
  if (cfg.schema_version != 1)
    problems.push_back("unsupported schema_version " + std::to_string(cfg.schema_version));
  if (cfg.name.empty()) problems.push_back("name must be non-empty");
  try {
    validate(cfg.formation);
  } catch (const std::invalid_argument& e) {
    problems.push_back(e.what());
  }
  if (!(cfg.init_low < cfg.init_high))
    problems.push_back("init bounds must satisfy low < high");
  if (!(cfg.limits.max_velocity > 0)) problems.push_back("max_velocity must be positive");
  if (cfg.limits.safe_distance < 0) problems.push_back("safe_distance must be nonnegative");
  if (cfg.rounds < 1) problems.push_back("rounds must be >= 1");
  if (cfg.trials < 1) problems.push_back("trials must be >= 1");
  if (!known_backend(cfg.default_backend))
    problems.push_back("unknown backend: " + cfg.default_backend);
  for (const auto& [id, spec] : cfg.backend_overrides) {
    if (id < 0 || id >= cfg.formation.agent_count)
      problems.push_back("backend override for unknown agent " + std::to_string(id));
    if (!known_backend(spec)) problems.push_back("unknown backend: " + spec);
  }
  for (const auto& [id, p] : cfg.personalities) {
    if (id < 0 || id >= cfg.formation.agent_count)
      problems.push_back("personality for unknown agent " + std::to_string(id));
    try {
      personality_from_name(p);
    } catch (const std::invalid_argument& e) {
      problems.push_back(e.what());
    }
  }
  for (int id : cfg.stationary_ids)
    if (id < 0 || id >= cfg.formation.agent_count)
      problems.push_back("stationary id out of range: " + std::to_string(id));
  if (cfg.chat.history != "full" && cfg.chat.history != "window")
    problems.push_back("history must be \"full\" or \"window\"");
  if (cfg.chat.history == "window" && cfg.chat.window_rounds < 1)
    problems.push_back("window_rounds must be >= 1");
  if (cfg.retry.max_attempts < 1) problems.push_back("max_attempts must be >= 1");
  try {
    validate(to_oracle_flocker(cfg.oracle, cfg.formation.desired_distance).alpha);
    if (cfg.oracle.substeps < 1) problems.push_back("substeps must be >= 1");
    if (!(cfg.oracle.dt > 0)) problems.push_back("dt must be positive");
    if (!(cfg.oracle.approach_step_cap > 0))
      problems.push_back("approach_step_cap must be positive");
  } catch (const std::invalid_argument& e) {
    problems.push_back(e.what());
  }
  if (!problems.empty()) {
    std::string msg = "invalid config:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
}

namespace {

json int_keyed_map(const std::map<int, std::string>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

std::map<int, std::string> from_int_keyed_map(const json& j) {
  std::map<int, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[std::stoi(it.key())] = it.value().get<std::string>();
  return out;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["schema_version"] = cfg.schema_version;
  j["name"] = cfg.name;
  j["world"] = {{"init_low", cfg.init_low},
                {"init_high", cfg.init_high},
                {"max_velocity", cfg.limits.max_velocity},
                {"safe_distance", cfg.limits.safe_distance},
                {"rounds", cfg.rounds}};
  j["formation"] = {{"shape", to_string(cfg.formation.shape)},
                    {"desired_distance", cfg.formation.desired_distance},
                    {"v_half_angle_deg", cfg.formation.v_half_angle_deg}};
  j["agents"] = {{"count", cfg.formation.agent_count},
                 {"stationary_ids", cfg.stationary_ids},
                 {"personalities", int_keyed_map(cfg.personalities)}};
  json chat = {{"base_url", cfg.chat.base_url},
               {"model", cfg.chat.model},
               {"api_key_env", cfg.chat.api_key_env},
               {"timeout_seconds", cfg.chat.timeout_seconds},
               {"history", cfg.chat.history},
               {"window_rounds", cfg.chat.window_rounds},
               {"include_velocities", cfg.chat.include_velocities}};
  if (cfg.chat.temperature) chat["temperature"] = *cfg.chat.temperature;
  if (cfg.chat.max_tokens) chat["max_tokens"] = *cfg.chat.max_tokens;
  json oracle = {{"sigma_eps", cfg.oracle.sigma_eps},
                 {"bump_h", cfg.oracle.bump_h},
                 {"phi_a", cfg.oracle.phi_a},
                 {"phi_b", cfg.oracle.phi_b},
                 {"range_multiplier", cfg.oracle.range_multiplier},
                 {"substeps", cfg.oracle.substeps},
                 {"dt", cfg.oracle.dt},
                 {"approach_step_cap", cfg.oracle.approach_step_cap}};
  if (cfg.oracle.interaction_range) oracle["interaction_range"] = *cfg.oracle.interaction_range;
  j["backend"] = {
      {"default", cfg.default_backend},
      {"overrides", int_keyed_map(cfg.backend_overrides)},
      {"chat", chat},
      {"oracle", oracle},
      {"retry",
       {{"max_attempts", cfg.retry.max_attempts},
        {"on_exhaustion",
         cfg.retry.on_exhaustion == RetryPolicy::OnExhaustion::HoldPosition
             ? "hold-position"
             : "fail-episode"}}},
      {"strict", cfg.strict}};
  j["logging"] = {{"out_dir", cfg.out_dir}};
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.schema_version = j.at("schema_version").get<int>();
    if (cfg.schema_version != 1)
      throw ConfigError("unsupported config schema_version " +
                        std::to_string(cfg.schema_version) + " (this build reads 1)");
    cfg.name = j.at("name").get<std::string>();
    const json& w = j.at("world");
    cfg.init_low = w.at("init_low").get<double>();
    cfg.init_high = w.at("init_high").get<double>();
    cfg.limits.max_velocity = w.at("max_velocity").get<double>();
    cfg.limits.safe_distance = w.at("safe_distance").get<double>();
    cfg.rounds = w.at("rounds").get<int>();
    const json& f = j.at("formation");
    cfg.formation.shape = shape_from_name(f.at("shape").get<std::string>());
    cfg.formation.desired_distance = f.at("desired_distance").get<double>();
    cfg.formation.v_half_angle_deg = f.value("v_half_angle_deg", 30.0);
    const json& a = j.at("agents");
    cfg.formation.agent_count = a.at("count").get<int>();
    cfg.stationary_ids = a.value("stationary_ids", std::vector<int>{});
    if (a.contains("personalities"))
      cfg.personalities = from_int_keyed_map(a.at("personalities"));
    const json& b = j.at("backend");
    cfg.default_backend = b.at("default").get<std::string>();
    if (b.contains("overrides")) cfg.backend_overrides = from_int_keyed_map(b.at("overrides"));
    const json& c = b.at("chat");
    cfg.chat.base_url = c.at("base_url").get<std::string>();
    cfg.chat.model = c.at("model").get<std::string>();
    cfg.chat.api_key_env = c.at("api_key_env").get<std::string>();
    if (c.contains("temperature")) cfg.chat.temperature = c.at("temperature").get<double>();
    if (c.contains("max_tokens")) cfg.chat.max_tokens = c.at("max_tokens").get<int>();
    cfg.chat.timeout_seconds = c.at("timeout_seconds").get<int>();
    cfg.chat.history = c.at("history").get<std::string>();
    cfg.chat.window_rounds = c.at("window_rounds").get<int>();
    cfg.chat.include_velocities = c.at("include_velocities").get<bool>();
    const json& o = b.at("oracle");
    cfg.oracle.sigma_eps = o.at("sigma_eps").get<double>();
    cfg.oracle.bump_h = o.at("bump_h").get<double>();
    cfg.oracle.phi_a = o.at("phi_a").get<double>();
    cfg.oracle.phi_b = o.at("phi_b").get<double>();
    cfg.oracle.range_multiplier = o.at("range_multiplier").get<double>();
    if (o.contains("interaction_range"))
      cfg.oracle.interaction_range = o.at("interaction_range").get<double>();
    cfg.oracle.substeps = o.at("substeps").get<int>();
    cfg.oracle.dt = o.at("dt").get<double>();
    cfg.oracle.approach_step_cap = o.at("approach_step_cap").get<double>();
    const json& r = b.at("retry");
    cfg.retry.max_attempts = r.at("max_attempts").get<int>();
    const std::string on = r.at("on_exhaustion").get<std::string>();
    if (on == "hold-position")
      cfg.retry.on_exhaustion = RetryPolicy::OnExhaustion::HoldPosition;
    else if (on == "fail-episode")
      cfg.retry.on_exhaustion = RetryPolicy::OnExhaustion::FailEpisode;
    else
      throw ConfigError("on_exhaustion must be \"hold-position\" or \"fail-episode\"");
    cfg.strict = b.at("strict").get<bool>();
    cfg.out_dir = j.at("logging").at("out_dir").get<std::string>();
    cfg.trials = j.at("trials").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
  validate_config(cfg);
  return cfg;
}

void save_config(const ExperimentConfig& cfg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write config file: " + path);
  out << config_to_json(cfg);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

std::vector<std::string> preset_names() {
  return {"circle5x5", "triangle3x5", "pair10", "pair10-one-stationary"};
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;
  cfg.name = name;
  if (name == "circle5x5") {
    cfg.formation = {Shape::Circle, 5.0, 5, 30.0};
  } else if (name == "triangle3x5") {
    cfg.formation = {Shape::Triangle, 5.0, 3, 30.0};
  } else if (name == "pair10") {
    cfg.formation = {Shape::PairDistance, 10.0, 2, 30.0};
  } else if (name == "pair10-one-stationary") {
    cfg.formation = {Shape::PairDistance, 10.0, 2, 30.0};
    cfg.stationary_ids = {0};
  } else {
    throw ConfigError("unknown preset: " + name +
                      " (expected one of circle5x5, triangle3x5, pair10, "
                      "pair10-one-stationary)");
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig resolve_config(const std::string& path_or_preset) {
  if (std::ifstream probe(path_or_preset); probe.good()) return load_config(path_or_preset);
  return preset_config(path_or_preset);
}

std::string config_digest(const ExperimentConfig& cfg) {
  const std::string doc = config_to_json(cfg);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : doc) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace flocksim
