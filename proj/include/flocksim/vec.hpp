#pragma once

#include <Eigen/Core>
#include <cmath>

namespace flocksim {

using Vec2 = Eigen::Vector2d;

inline bool is_finite(const Vec2& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y());
}

}  // namespace flocksim
