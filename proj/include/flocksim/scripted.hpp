#pragma once

#include <string>

#include "flocksim/alpha_lattice.hpp"
#include "flocksim/world.hpp"

namespace flocksim {

// Deterministic archetype policies: each reproduces one failure (or success)
// signature offline, with no network dependency.
enum class ScriptedKind {
  Stationary,           // never moves
  ConsensusSeeker,      // heads for the mean of all positions (collapse archetype)
  Diverger,             // flees its nearest peer at full speed (divergence archetype)
  Stubborn,             // stays put by preference
  Suggestible,          // adopts the nearest peer's position
  OracleFlockerWrapper  // delegates to the lattice controller
};

ScriptedKind scripted_kind_from_name(const std::string& name);
std::string to_string(ScriptedKind kind);

struct ScriptedSettings {
  ScriptedKind kind = ScriptedKind::Stationary;
  double consensus_damping = 1.0;  // fraction of the way to the mean per round
  OracleFlockerSettings oracle;
};

Decision consensus_seeker_decide(int i, const WorldState& state, double damping = 1.0);
Decision diverger_decide(int i, const WorldState& state, const MotionLimits& limits);
Decision stubborn_decide(int i, const WorldState& state);
Decision suggestible_decide(int i, const WorldState& state);

Decision scripted_decide(int i, const WorldState& state, const MotionLimits& limits,
                         const ScriptedSettings& settings);

}  // namespace flocksim
