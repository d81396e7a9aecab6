#include "flocksim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace flocksim {

RoundMetrics compute_round_metrics(const std::vector<Vec2>& positions,
                                   double desired_distance) {
  if (positions.size() < 2)
    throw std::invalid_argument("metrics need at least 2 agents");
  RoundMetrics m;
  m.mae = mae(positions, desired_distance);
  m.min_distance = std::numeric_limits<double>::infinity();
  m.max_distance = 0.0;
  for (size_t i = 0; i < positions.size(); ++i) {
    for (size_t j = i + 1; j < positions.size(); ++j) {
      const double d = (positions[i] - positions[j]).norm();
      m.min_distance = std::min(m.min_distance, d);
      m.max_distance = std::max(m.max_distance, d);
    }
  }
  m.centroid = Vec2::Zero();
  for (const auto& p : positions) m.centroid += p;
  m.centroid /= static_cast<double>(positions.size());
  double sq = 0.0;
  for (const auto& p : positions) sq += (p - m.centroid).squaredNorm();
  m.spread = std::sqrt(sq / static_cast<double>(positions.size()));
  return m;
}

void MetricSeries::append(const std::vector<Vec2>& pos, double desired_distance) {
  per_round.push_back(compute_round_metrics(pos, desired_distance));
  positions.push_back(pos);
}

Outcome outcome_from_name(const std::string& name) {
  if (name == "flocked") return Outcome::Flocked;
  if (name == "collapsed") return Outcome::Collapsed;
  if (name == "diverged") return Outcome::Diverged;
  if (name == "oscillating") return Outcome::Oscillating;
  if (name == "inconclusive") return Outcome::Inconclusive;
  throw std::invalid_argument("unknown outcome: " + name);
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Flocked: return "flocked";
    case Outcome::Collapsed: return "collapsed";
    case Outcome::Diverged: return "diverged";
    case Outcome::Oscillating: return "oscillating";
    case Outcome::Inconclusive: return "inconclusive";
  }
  throw std::logic_error("unhandled outcome");
}

namespace {

std::string formatted(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

}  // namespace

OutcomeLabel classify_outcome(const MetricSeries& series, const FormationSpec& spec) {
  if (series.size() < 5)
    throw std::invalid_argument("outcome classification needs at least 5 rounds");
  const double d = spec.desired_distance;
  const RoundMetrics& first = series.per_round.front();
  const RoundMetrics& last = series.per_round.back();
  const size_t n = series.size();

  bool flocked = true;
  for (size_t k = n - 3; k < n; ++k)
    flocked = flocked && series.per_round[k].mae <= kMaeSuccessMargin;
  if (flocked)
    return {Outcome::Flocked,
            formatted("MAE <= %.2f over the final 3 rounds (final %.4f)",
                      kMaeSuccessMargin, last.mae)};

  if (last.max_distance < 0.5 * d && last.spread <= 0.2 * first.spread)
    return {Outcome::Collapsed,
            formatted("final max pairwise %.4f < half the desired distance; "
                      "spread fell to %.4f of initial",
                      last.max_distance,
                      first.spread > 0 ? last.spread / first.spread : 0.0)};

  if (last.min_distance > 2.0 * d && last.max_distance >= 1.5 * first.max_distance)
    return {Outcome::Diverged,
            formatted("final min pairwise %.4f > twice the desired distance; "
                      "max pairwise grew %.2fx",
                      last.min_distance,
                      first.max_distance > 0 ? last.max_distance / first.max_distance
                                             : 0.0)};

  // Oscillation: within the final 6 rounds some agent's centroid-relative
  // coordinate flips sign at least 3 times with swings larger than the
  // desired distance.
  const size_t window = std::min<size_t>(6, n);
  const size_t start = n - window;
  const size_t agents = series.positions.front().size();
  for (size_t a = 0; a < agents; ++a) {
    for (int c = 0; c < 2; ++c) {
      int flips = 0;
      for (size_t k = start; k + 1 < n; ++k) {
        const double u =
            series.positions[k][a][c] - series.per_round[k].centroid[c];
        const double v =
            series.positions[k + 1][a][c] - series.per_round[k + 1].centroid[c];
        if (u * v < 0 && std::abs(u - v) > d) ++flips;
      }
      if (flips >= 3)
        return {Outcome::Oscillating,
                formatted("agent coordinate flipped sign %.0f times with swings "
                          "above %.2f in the final rounds",
                          static_cast<double>(flips), d)};
    }
  }

  return {Outcome::Inconclusive,
          formatted("no rule matched (final MAE %.4f, final spread %.4f)", last.mae,
                    last.spread)};
}

}  // namespace flocksim
