#pragma once

#include "flocksim/transcript.hpp"

namespace flocksim {

// Re-simulate an episode from its transcript: chat agents get their recorded
// assistant texts re-served byte-for-byte through the normal parse/retry
// path; other agents re-issue their recorded position commands. The
// regenerated trajectories are byte-identical to the original run's.
Transcript replay_transcript(const Transcript& original);

Transcript replay_file(const std::string& path);

}  // namespace flocksim
