#pragma once

#include <string>

#include "flocksim/transcript.hpp"

namespace flocksim {

// Per-agent colored paths with round markers and the target-formation
// overlay, anchored at the final centroid.
std::string trajectory_svg(const Transcript& t);

// MAE against round number, with the success margin as a dashed line.
std::string mae_svg(const Transcript& t);

// Write both panels: <stem>_traj.svg and <stem>_mae.svg. `out` may carry a
// .svg suffix, which is treated as the stem. Returns the two paths written.
std::pair<std::string, std::string> write_plots(const Transcript& t, const std::string& out);

}  // namespace flocksim
