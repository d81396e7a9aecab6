#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "flocksim/metrics.hpp"

using namespace flocksim;

namespace {

FormationSpec pair_spec(double d) {
  FormationSpec f;
  f.shape = Shape::PairDistance;
  f.agent_count = 2;
  f.desired_distance = d;
  return f;
}

}  // namespace

TEST_CASE("round metrics cover mae, extremes, centroid and spread") {
  const std::vector<Vec2> pos = {{0, 0}, {6, 0}, {0, 8}};
  const RoundMetrics m = compute_round_metrics(pos, 5.0);
  CHECK(m.min_distance == doctest::Approx(6.0));
  CHECK(m.max_distance == doctest::Approx(10.0));
  CHECK(m.centroid.x() == doctest::Approx(2.0));
  CHECK(m.centroid.y() == doctest::Approx(8.0 / 3.0));
  // mae: nearest distances are 6, 6, 8 -> errors 1, 1, 3 -> mean 5/3.
  CHECK(m.mae == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  const double expected_spread = std::sqrt(
      ((pos[0] - m.centroid).squaredNorm() + (pos[1] - m.centroid).squaredNorm() +
       (pos[2] - m.centroid).squaredNorm()) /
      3.0);
  CHECK(m.spread == doctest::Approx(expected_spread).epsilon(1e-12));
  CHECK_THROWS_AS(compute_round_metrics({{0, 0}}, 5.0), std::invalid_argument);
}

TEST_CASE("outcome names round-trip") {
  for (const char* name :
       {"flocked", "collapsed", "diverged", "oscillating", "inconclusive"}) {
    CHECK(to_string(outcome_from_name(name)) == name);
  }
  CHECK_THROWS_AS(outcome_from_name("great"), std::invalid_argument);
}

TEST_CASE("classification requires at least five entries") {
  MetricSeries s;
  for (int i = 0; i < 4; ++i) s.append({{0, 0}, {5, 0}}, 5.0);
  CHECK_THROWS_AS(classify_outcome(s, pair_spec(5.0)), std::invalid_argument);
  s.append({{0, 0}, {5, 0}}, 5.0);
  CHECK_NOTHROW(classify_outcome(s, pair_spec(5.0)));
}

TEST_CASE("flocked label needs the margin held over the final three rounds") {
  MetricSeries s;
  // Start far off, finish on target: last 3 rounds within margin.
  s.append({{0, 0}, {20, 0}}, 5.0);
  s.append({{0, 0}, {12, 0}}, 5.0);
  s.append({{0, 0}, {5.1, 0}}, 5.0);
  s.append({{0, 0}, {4.95, 0}}, 5.0);
  s.append({{0, 0}, {5.0, 0}}, 5.0);
  const OutcomeLabel out = classify_outcome(s, pair_spec(5.0));
  CHECK(out.label == Outcome::Flocked);
  CHECK(out.evidence.find("final 3 rounds") != std::string::npos);

  // A final-round excursion breaks it.
  MetricSeries bad = s;
  bad.append({{0, 0}, {9, 0}}, 5.0);
  CHECK(classify_outcome(bad, pair_spec(5.0)).label != Outcome::Flocked);
}

TEST_CASE("collapse is a shrunken cluster") {
  MetricSeries s;
  s.append({{0, 0}, {20, 0}, {0, 20}}, 5.0);
  s.append({{2, 2}, {10, 2}, {2, 10}}, 5.0);
  s.append({{4, 4}, {6, 4}, {4, 6}}, 5.0);
  s.append({{5, 5}, {5.5, 5}, {5, 5.5}}, 5.0);
  s.append({{5, 5}, {5.2, 5}, {5, 5.2}}, 5.0);
  FormationSpec f;
  f.shape = Shape::Triangle;
  f.agent_count = 3;
  f.desired_distance = 5.0;
  const OutcomeLabel out = classify_outcome(s, f);
  CHECK(out.label == Outcome::Collapsed);
  CHECK(out.evidence.find("spread") != std::string::npos);
}

TEST_CASE("divergence needs both wide separation and real growth") {
  MetricSeries s;
  s.append({{0, 0}, {8, 0}}, 5.0);
  s.append({{-4, 0}, {12, 0}}, 5.0);
  s.append({{-8, 0}, {16, 0}}, 5.0);
  s.append({{-12, 0}, {20, 0}}, 5.0);
  s.append({{-16, 0}, {24, 0}}, 5.0);  // min pairwise 40 > 10, growth 5x
  const OutcomeLabel out = classify_outcome(s, pair_spec(5.0));
  CHECK(out.label == Outcome::Diverged);

  // Far apart from the start but not growing: inconclusive instead.
  MetricSeries flat;
  for (int i = 0; i < 5; ++i) flat.append({{0, 0}, {40, 0}}, 5.0);
  CHECK(classify_outcome(flat, pair_spec(5.0)).label == Outcome::Inconclusive);
}

TEST_CASE("oscillation counts large centroid-relative sign flips") {
  MetricSeries s;
  // Two agents swapping sides every round: each agent's centroid-relative x
  // flips sign each step with swing 8 > d=5.
  for (int i = 0; i < 8; ++i) {
    if (i % 2 == 0)
      s.append({{-4, 0}, {4, 0}}, 5.0);
    else
      s.append({{4, 0}, {-4, 0}}, 5.0);
  }
  const OutcomeLabel out = classify_outcome(s, pair_spec(5.0));
  CHECK(out.label == Outcome::Oscillating);
  CHECK(out.evidence.find("flipped sign") != std::string::npos);

  // Small-amplitude jitter (swing below d) is not oscillation.
  MetricSeries small;
  for (int i = 0; i < 8; ++i) {
    if (i % 2 == 0)
      small.append({{-1, 0}, {1, 0}}, 5.0);
    else
      small.append({{1, 0}, {-1, 0}}, 5.0);
  }
  CHECK(classify_outcome(small, pair_spec(5.0)).label != Outcome::Oscillating);
}

TEST_CASE("precedence: a flocked finish outranks everything else") {
  // Construct a series that oscillates early yet settles onto the target
  // distance for the last 3 rounds; flocked must win.
  MetricSeries s;
  s.append({{-4, 0}, {4, 0}}, 5.0);
  s.append({{4, 0}, {-4, 0}}, 5.0);
  s.append({{-4, 0}, {4, 0}}, 5.0);
  s.append({{0, 0}, {5, 0}}, 5.0);
  s.append({{0, 0}, {5.05, 0}}, 5.0);
  s.append({{0, 0}, {4.95, 0}}, 5.0);
  CHECK(classify_outcome(s, pair_spec(5.0)).label == Outcome::Flocked);
}

TEST_CASE("series append records both metrics and raw positions") {
  MetricSeries s;
  s.append({{0, 0}, {5, 0}}, 5.0);
  REQUIRE(s.size() == 1);
  REQUIRE(s.positions.size() == 1);
  CHECK(s.positions[0][1] == Vec2(5, 0));
  CHECK(s.per_round[0].mae == doctest::Approx(0.0));
}
