#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flocksim/vec.hpp"

namespace flocksim {

struct MotionLimits {
  double max_velocity = 5.0;   // world units per round
  double safe_distance = 2.0;  // closer pairs are logged as near-collisions
};

struct AgentState {
  int id = 0;
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();  // realized displacement of the last round
  bool stationary = false;
};

struct WorldState {
  int round = 0;
  std::vector<AgentState> agents;  // ascending unique ids

  const AgentState& agent(int id) const;
  std::vector<Vec2> positions() const;
};

// A position command plus the free-text justification that produced it.
struct Decision {
  Vec2 target = Vec2::Zero();
  std::string reasoning;
};

// Per-agent slice of one round's record.
struct AgentRoundLog {
  int agent_id = 0;
  Vec2 position_before = Vec2::Zero();
  Vec2 requested_target = Vec2::Zero();
  Vec2 position_after = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
  bool clamped = false;
  bool stationary = false;
  bool held = false;  // retries exhausted, agent held in place
  int attempts = 0;   // chat calls consumed this round (0 for local backends)
  int parse_failures = 0;
  std::string reasoning;
  std::vector<std::string> raw_attempts;  // every assistant text, last one final
};

struct RoundRecord {
  int round = 0;  // round index this record produced (1-based)
  std::vector<AgentRoundLog> agents;
  double min_pairwise_distance = 0.0;  // after the move
  std::vector<std::pair<int, int>> safe_distance_violations;
};

WorldState make_world(const std::vector<Vec2>& positions,
                      const std::vector<int>& stationary_ids = {});

// Clamp a position command so the step length never exceeds max_velocity.
// Sets *clamped when the command had to be shortened.
Vec2 clamp_move(const Vec2& current, const Vec2& target, const MotionLimits& limits,
                bool* clamped = nullptr);

// Apply one synchronous round: every decision was computed against `state`,
// then all agents move at once. Stationary agents stay put regardless of any
// decision. Safe-distance violations are logged, never prevented.
std::pair<WorldState, RoundRecord> step_world(const WorldState& state,
                                              const std::map<int, Decision>& decisions,
                                              const MotionLimits& limits);

// Semi-implicit Euler for the double-integrator model: v += u*dt, then q += v*dt.
WorldState integrate_double(const WorldState& state,
                            const std::map<int, Vec2>& accelerations, double dt);

double min_pairwise_distance(const std::vector<Vec2>& positions);

}  // namespace flocksim
