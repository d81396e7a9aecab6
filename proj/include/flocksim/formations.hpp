#pragma once

#include <string>
#include <vector>

#include "flocksim/vec.hpp"

namespace flocksim {

enum class Shape { Circle, AlphaLattice, VShape, Line, Triangle, PairDistance };

Shape shape_from_name(const std::string& name);
std::string to_string(Shape shape);

struct FormationSpec {
  Shape shape = Shape::Circle;
  double desired_distance = 5.0;  // target nearest-neighbor spacing
  int agent_count = 5;
  double v_half_angle_deg = 30.0;  // opening half-angle of the v-shape rays
};

void validate(const FormationSpec& spec);  // throws std::invalid_argument

// Circumradius for which adjacent points of a regular n-gon sit `spacing`
// apart: spacing / (2*sin(pi/n)). Two points have no circle; n >= 3.
double circle_radius(int agent_count, double spacing);

// Ideal agent placements for the formation, anchored at `anchor`. Every
// returned set has nearest-neighbor spacing equal to desired_distance.
std::vector<Vec2> target_positions(const FormationSpec& spec,
                                   const Vec2& anchor = Vec2::Zero());

// Mean over agents of |nearest-neighbor distance - desired_distance|.
double mae(const std::vector<Vec2>& positions, double desired_distance);

}  // namespace flocksim
