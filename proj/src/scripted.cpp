#include "flocksim/scripted.hpp"

#include <limits>
#include <stdexcept>

namespace flocksim {

ScriptedKind scripted_kind_from_name(const std::string& name) {
  if (name == "stationary") return ScriptedKind::Stationary;
  if (name == "consensus-seeker") return ScriptedKind::ConsensusSeeker;
  if (name == "diverger") return ScriptedKind::Diverger;
  if (name == "stubborn") return ScriptedKind::Stubborn;
  if (name == "suggestible") return ScriptedKind::Suggestible;
  if (name == "oracle-flocker-wrapper") return ScriptedKind::OracleFlockerWrapper;
  throw std::invalid_argument("unknown scripted policy: " + name);
}

std::string to_string(ScriptedKind kind) {
  switch (kind) {
    case ScriptedKind::Stationary: return "stationary";
    case ScriptedKind::ConsensusSeeker: return "consensus-seeker";
    case ScriptedKind::Diverger: return "diverger";
    case ScriptedKind::Stubborn: return "stubborn";
    case ScriptedKind::Suggestible: return "suggestible";
    case ScriptedKind::OracleFlockerWrapper: return "oracle-flocker-wrapper";
  }
  throw std::logic_error("unhandled scripted kind");
}

namespace {

// Nearest other agent, ties to the lowest id.
const AgentState& nearest_other(int i, const WorldState& state) {
  if (state.agents.size() < 2) throw std::invalid_argument("need at least 2 agents");
  const AgentState& self = state.agent(i);
  const AgentState* best = nullptr;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& a : state.agents) {
    if (a.id == i) continue;
    const double d = (a.position - self.position).norm();
    if (d < best_d) {
      best_d = d;
      best = &a;
    }
  }
  return *best;
}

}  // namespace

Decision consensus_seeker_decide(int i, const WorldState& state, double damping) {
  if (state.agents.size() < 2) throw std::invalid_argument("need at least 2 agents");
  Vec2 mean = Vec2::Zero();
  for (const auto& a : state.agents) mean += a.position;
  mean /= static_cast<double>(state.agents.size());
  const Vec2 own = state.agent(i).position;
  return {own + damping * (mean - own), "moving to the mean of all agent positions"};
}

Decision diverger_decide(int i, const WorldState& state, const MotionLimits& limits) {
  const AgentState& self = state.agent(i);
  const AgentState& peer = nearest_other(i, state);
  Vec2 away = self.position - peer.position;
  const double d = away.norm();
  if (d == 0) away = Vec2(1.0, 0.0);  // coincident: flee along +x
  else away /= d;
  return {self.position + limits.max_velocity * away,
          "moving away from the nearest agent"};
}

Decision stubborn_decide(int i, const WorldState& state) {
  return {state.agent(i).position, "staying where I am"};
}

Decision suggestible_decide(int i, const WorldState& state) {
  return {nearest_other(i, state).position, "moving to the nearest agent's position"};
}

Decision scripted_decide(int i, const WorldState& state, const MotionLimits& limits,
                         const ScriptedSettings& settings) {
  switch (settings.kind) {
    case ScriptedKind::Stationary:
    case ScriptedKind::Stubborn: return stubborn_decide(i, state);
    case ScriptedKind::ConsensusSeeker:
      return consensus_seeker_decide(i, state, settings.consensus_damping);
    case ScriptedKind::Diverger: return diverger_decide(i, state, limits);
    case ScriptedKind::Suggestible: return suggestible_decide(i, state);
    case ScriptedKind::OracleFlockerWrapper:
      return oracle_flocker_decide(i, state, settings.oracle);
  }
  throw std::logic_error("unhandled scripted kind");
}

}  // namespace flocksim
