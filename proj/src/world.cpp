#include "flocksim/world.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace flocksim {

const AgentState& WorldState::agent(int id) const {
  for (const auto& a : agents) {
    if (a.id == id) return a;
  }
  throw std::out_of_range("unknown agent id " + std::to_string(id));
}

std::vector<Vec2> WorldState::positions() const {
  std::vector<Vec2> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.position);
  return out;
}

WorldState make_world(const std::vector<Vec2>& positions,
                      const std::vector<int>& stationary_ids) {
  WorldState w;
  w.agents.reserve(positions.size());
  for (size_t i = 0; i < positions.size(); ++i) {
    if (!is_finite(positions[i])) throw std::invalid_argument("non-finite initial position");
    AgentState a;
    a.id = static_cast<int>(i);
    a.position = positions[i];
    a.stationary =
        std::find(stationary_ids.begin(), stationary_ids.end(), a.id) != stationary_ids.end();
    w.agents.push_back(a);
  }
  return w;
}

Vec2 clamp_move(const Vec2& current, const Vec2& target, const MotionLimits& limits,
                bool* clamped) {
  if (!is_finite(current) || !is_finite(target))
    throw std::invalid_argument("non-finite position in clamp_move");
  if (clamped) *clamped = false;
  const Vec2 delta = target - current;
  const double len = delta.norm();
  if (len <= limits.max_velocity) return target;
  if (clamped) *clamped = true;
  return current + delta * (limits.max_velocity / len);
}

std::pair<WorldState, RoundRecord> step_world(const WorldState& state,
                                              const std::map<int, Decision>& decisions,
                                              const MotionLimits& limits) {
  for (const auto& [id, d] : decisions) {
    const bool known = std::any_of(state.agents.begin(), state.agents.end(),
                                   [id](const AgentState& a) { return a.id == id; });
    if (!known) throw std::invalid_argument("unknown agent id " + std::to_string(id));
    if (!is_finite(d.target)) throw std::invalid_argument("non-finite decision target");
  }

  WorldState next = state;
  next.round = state.round + 1;
  RoundRecord rec;
  rec.round = next.round;
  rec.agents.reserve(state.agents.size());

  for (auto& a : next.agents) {
    AgentRoundLog log;
    log.agent_id = a.id;
    log.position_before = a.position;
    log.stationary = a.stationary;
    if (a.stationary) {
      log.requested_target = a.position;
      a.velocity = Vec2::Zero();
    } else {
      auto it = decisions.find(a.id);
      if (it == decisions.end())
        throw std::invalid_argument("missing decision for active agent " +
                                    std::to_string(a.id));
      log.requested_target = it->second.target;
      log.reasoning = it->second.reasoning;
      const Vec2 landed = clamp_move(a.position, it->second.target, limits, &log.clamped);
      a.velocity = landed - a.position;
      a.position = landed;
    }
    log.position_after = a.position;
    log.velocity = a.velocity;
    rec.agents.push_back(std::move(log));
  }

  rec.min_pairwise_distance = min_pairwise_distance(next.positions());
  for (size_t i = 0; i < next.agents.size(); ++i) {
    for (size_t j = i + 1; j < next.agents.size(); ++j) {
      const double d = (next.agents[i].position - next.agents[j].position).norm();
      if (d < limits.safe_distance)
        rec.safe_distance_violations.emplace_back(next.agents[i].id, next.agents[j].id);
    }
  }
  return {std::move(next), std::move(rec)};
}

WorldState integrate_double(const WorldState& state,
                            const std::map<int, Vec2>& accelerations, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  WorldState next = state;
  for (auto& a : next.agents) {
    Vec2 u = Vec2::Zero();
    if (auto it = accelerations.find(a.id); it != accelerations.end()) u = it->second;
    if (!is_finite(u)) throw std::invalid_argument("non-finite acceleration");
    a.velocity += u * dt;
    a.position += a.velocity * dt;
  }
  return next;
}

double min_pairwise_distance(const std::vector<Vec2>& positions) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < positions.size(); ++i)
    for (size_t j = i + 1; j < positions.size(); ++j)
      best = std::min(best, (positions[i] - positions[j]).norm());
  return best;
}

}  // namespace flocksim
