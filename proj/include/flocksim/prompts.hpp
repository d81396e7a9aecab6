#pragma once

#include <string>
#include <vector>

#include "flocksim/world.hpp"

namespace flocksim {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

// The four instruction texts sent to every agent. Slots are written "[{}]"
// and filled in order; the brackets stay in the rendered text.
struct PromptTemplates {
  std::string agent_role;
  std::string game_description;
  std::string round_description;
  std::string output_format;
  // Appended only when velocity injection is enabled.
  std::string velocity_note;

  static PromptTemplates defaults();
};

enum class Personality { None, Stubborn, Suggestible };

Personality personality_from_name(const std::string& name);
std::string to_string(Personality p);
// Sentence prepended to the first message; empty for Personality::None.
std::string personality_line(Personality p);

// Decimal truncation (not rounding) to two places: 1.999 -> "1.99".
std::string truncate2(double v);
// "[x, y]" with truncated coordinates.
std::string format_position(const Vec2& p);
// "[x1, y1], [x2, y2], ..." — each pair bracketed, comma-joined.
std::string format_positions(const std::vector<Vec2>& ps);

// Replace each "{}" in order; throws if the value count does not match the
// slot count.
std::string render_slots(const std::string& tmpl, const std::vector<std::string>& values);

// The one user message opening an agent's conversation: optional personality
// line, the role text, the filled game description, and the format contract.
ChatMessage initial_prompt_message(const PromptTemplates& templates, Personality personality,
                                   const AgentState& self,
                                   const std::vector<AgentState>& others,
                                   const MotionLimits& limits, const std::string& shape_name,
                                   bool include_velocities = false);

// The per-round user message: the filled round description.
ChatMessage round_prompt_message(const PromptTemplates& templates, const AgentState& self,
                                 const std::vector<AgentState>& others,
                                 bool include_velocities = false);

}  // namespace flocksim
