#pragma once

#include <string>
#include <vector>

#include "flocksim/formations.hpp"
#include "flocksim/vec.hpp"

namespace flocksim {

// Error margin under which a formation counts as achieved.
inline constexpr double kMaeSuccessMargin = 0.2;

struct RoundMetrics {
  double mae = 0.0;
  double min_distance = 0.0;  // min pairwise
  double max_distance = 0.0;  // max pairwise
  Vec2 centroid = Vec2::Zero();
  double spread = 0.0;  // RMS distance to centroid
};

RoundMetrics compute_round_metrics(const std::vector<Vec2>& positions,
                                   double desired_distance);

// Per-round metric rows plus the position snapshots they were computed from
// (entry 0 is the initial state, so length = rounds + 1).
struct MetricSeries {
  std::vector<RoundMetrics> per_round;
  std::vector<std::vector<Vec2>> positions;

  void append(const std::vector<Vec2>& pos, double desired_distance);
  size_t size() const { return per_round.size(); }
};

enum class Outcome { Flocked, Collapsed, Diverged, Oscillating, Inconclusive };

Outcome outcome_from_name(const std::string& name);
std::string to_string(Outcome outcome);

struct OutcomeLabel {
  Outcome label = Outcome::Inconclusive;
  std::string evidence;  // the statistics that triggered the label
};

// Assign exactly one label, precedence flocked > collapsed > diverged >
// oscillating > inconclusive. Requires at least 5 entries.
OutcomeLabel classify_outcome(const MetricSeries& series, const FormationSpec& spec);

}  // namespace flocksim
