#include "flocksim/prompts.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace flocksim {

PromptTemplates PromptTemplates::defaults() {
  PromptTemplates t;
  t.agent_role = "You are a agent navigating a two-dimensional space.";
  t.game_description =
      "There are other agents in the space, and you must coordinate with each other "
      "to form a flock of a specified shape. Keep in mind Boids flocking rules. Your "
      "position is: [{}]. The positions of the other agents (in the format [[x, y], "
      "[x, y]...]) are: [{}]. The maximum velocity is [{}] units per round. The flock "
      "shape is a [{}]. You must avoid getting closer than [{}] units to any peers, "
      "otherwise, you may collide. Remember to consider the positions and velocity of "
      "other agents and consider how they might behave. You need to choose a position "
      "to move to in order to form a flock, and briefly explain the reasoning behind "
      "your decision.";
  t.round_description =
      "You have now moved to: [{}]. The new positions of the other agents are: [{}]. "
      "Consider how well your strategy worked last round, keeping in mind your "
      "maximum velocity, Please select a new position to move to.";
  t.output_format =
      "Strictly follow the 'Reasoning:..., Position: [x, y]' format to provide your "
      "answer. x and y must both be floating point numbers truncated to two decimal "
      "places. Briefly provide your thought process in the reasoning section while "
      "keeping the position section ONLY for the position you wish to move to this "
      "iteration, without any further explanation. Do not write ANYTHING ELSE in the "
      "position section.";
  t.velocity_note =
      "The current velocities of the other agents (in the format [[x, y], "
      "[x, y]...]) are: [{}].";
  return t;
}

Personality personality_from_name(const std::string& name) {
  if (name == "none") return Personality::None;
  if (name == "stubborn") return Personality::Stubborn;
  if (name == "suggestible") return Personality::Suggestible;
  throw std::invalid_argument("unknown personality: " + name);
}

std::string to_string(Personality p) {
  switch (p) {
    case Personality::None: return "none";
    case Personality::Stubborn: return "stubborn";
    case Personality::Suggestible: return "suggestible";
  }
  throw std::logic_error("unhandled personality");
}

std::string personality_line(Personality p) {
  switch (p) {
    case Personality::None: return "";
    case Personality::Stubborn:
      return "You are an extremely stubborn person, prefer to remain stationary.";
    case Personality::Suggestible:
      return "You are an extremely suggestible person, prefer to move to someone "
             "else's position.";
  }
  throw std::logic_error("unhandled personality");
}

std::string truncate2(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot format non-finite value");
  double t = std::trunc(v * 100.0) / 100.0;
  if (t == 0.0) t = 0.0;  // never print "-0.00"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", t);
  return buf;
}

std::string format_position(const Vec2& p) {
  return "[" + truncate2(p.x()) + ", " + truncate2(p.y()) + "]";
}

std::string format_positions(const std::vector<Vec2>& ps) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += format_position(ps[i]);
  }
  return out;
}

std::string render_slots(const std::string& tmpl, const std::vector<std::string>& values) {
  std::string out;
  out.reserve(tmpl.size() + 32 * values.size());
  size_t pos = 0, used = 0;
  while (true) {
    const size_t slot = tmpl.find("{}", pos);
    if (slot == std::string::npos) break;
    if (used == values.size()) throw std::invalid_argument("more slots than values");
    out.append(tmpl, pos, slot - pos);
    out += values[used++];
    pos = slot + 2;
  }
  out.append(tmpl, pos, std::string::npos);
  if (used != values.size()) throw std::invalid_argument("more values than slots");
  return out;
}

namespace {

// Strip the surrounding brackets of a rendered "[x, y]" pair: the slot in
// "[{}]" supplies only the interior.
std::string interior(const std::string& bracketed) {
  return bracketed.substr(1, bracketed.size() - 2);
}

std::vector<Vec2> other_positions(const std::vector<AgentState>& others) {
  std::vector<Vec2> ps;
  ps.reserve(others.size());
  for (const auto& a : others) ps.push_back(a.position);
  return ps;
}

std::vector<Vec2> other_velocities(const std::vector<AgentState>& others) {
  std::vector<Vec2> vs;
  vs.reserve(others.size());
  for (const auto& a : others) vs.push_back(a.velocity);
  return vs;
}

}  // namespace

ChatMessage initial_prompt_message(const PromptTemplates& templates, Personality personality,
                                   const AgentState& self,
                                   const std::vector<AgentState>& others,
                                   const MotionLimits& limits, const std::string& shape_name,
                                   bool include_velocities) {
  if (others.empty()) throw std::invalid_argument("prompt needs at least one other agent");
  std::string game = render_slots(
      templates.game_description,
      {interior(format_position(self.position)), format_positions(other_positions(others)),
       truncate2(limits.max_velocity), shape_name, truncate2(limits.safe_distance)});
  if (include_velocities)
    game += " " + render_slots(templates.velocity_note,
                               {format_positions(other_velocities(others))});
  std::string content;
  const std::string persona = personality_line(personality);
  if (!persona.empty()) content += persona + " ";
  content += templates.agent_role + " " + game + " " + templates.output_format;
  return {"user", content};
}

ChatMessage round_prompt_message(const PromptTemplates& templates, const AgentState& self,
                                 const std::vector<AgentState>& others,
                                 bool include_velocities) {
  if (others.empty()) throw std::invalid_argument("prompt needs at least one other agent");
  std::string content = render_slots(
      templates.round_description,
      {interior(format_position(self.position)), format_positions(other_positions(others))});
  if (include_velocities)
    content += " " + render_slots(templates.velocity_note,
                                  {format_positions(other_velocities(others))});
  return {"user", content};
}

}  // namespace flocksim
