#include "flocksim/formations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flocksim {

Shape shape_from_name(const std::string& name) {
  if (name == "circle") return Shape::Circle;
  if (name == "alpha-lattice") return Shape::AlphaLattice;
  if (name == "v-shape") return Shape::VShape;
  if (name == "line") return Shape::Line;
  if (name == "triangle") return Shape::Triangle;
  if (name == "pair-distance") return Shape::PairDistance;
  throw std::invalid_argument("unknown formation shape: " + name);
}

std::string to_string(Shape shape) {
  switch (shape) {
    case Shape::Circle: return "circle";
    case Shape::AlphaLattice: return "alpha-lattice";
    case Shape::VShape: return "v-shape";
    case Shape::Line: return "line";
    case Shape::Triangle: return "triangle";
    case Shape::PairDistance: return "pair-distance";
  }
  throw std::logic_error("unhandled shape");
}

void validate(const FormationSpec& spec) {
  if (!(spec.desired_distance > 0))
    throw std::invalid_argument("desired_distance must be positive");
  if (spec.agent_count < 2) throw std::invalid_argument("need at least 2 agents");
  switch (spec.shape) {
    case Shape::Circle:
      if (spec.agent_count < 3)
        throw std::invalid_argument("circle formation needs at least 3 agents");
      break;
    case Shape::Triangle:
      if (spec.agent_count != 3)
        throw std::invalid_argument("triangle formation needs exactly 3 agents");
      break;
    case Shape::VShape:
      if (spec.agent_count < 3)
        throw std::invalid_argument("v-shape formation needs at least 3 agents");
      if (!(spec.v_half_angle_deg > 0 && spec.v_half_angle_deg < 90))
        throw std::invalid_argument("v-shape half-angle must be in (0,90) degrees");
      break;
    case Shape::PairDistance:
      if (spec.agent_count != 2)
        throw std::invalid_argument("pair-distance formation needs exactly 2 agents");
      break;
    case Shape::Line:
    case Shape::AlphaLattice: break;
  }
}

double circle_radius(int agent_count, double spacing) {
  if (agent_count < 3)
    throw std::invalid_argument("circle_radius needs at least 3 agents");
  if (!(spacing > 0)) throw std::invalid_argument("spacing must be positive");
  // Evaluate in extended precision: the double-rounded sin(pi/n) can miss the
  // closed-form radius (e.g. n=6 must give exactly the spacing).
  const long double pi = std::acos(-1.0L);
  const long double r =
      static_cast<long double>(spacing) /
      (2.0L * std::sin(pi / static_cast<long double>(agent_count)));
  return static_cast<double>(r);
}

namespace {

std::vector<Vec2> circle_points(int n, double d, const Vec2& anchor) {
  const double radius = circle_radius(n, d);
  std::vector<Vec2> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * k / n;
    out.push_back(anchor + radius * Vec2(std::cos(angle), std::sin(angle)));
  }
  return out;
}

std::vector<Vec2> triangle_points(double d, const Vec2& anchor) {
  const double radius = d / std::sqrt(3.0);  // equilateral circumradius
  std::vector<Vec2> out;
  for (int k = 0; k < 3; ++k) {
    const double angle = M_PI / 2 + 2.0 * M_PI * k / 3;
    out.push_back(anchor + radius * Vec2(std::cos(angle), std::sin(angle)));
  }
  return out;
}

std::vector<Vec2> line_points(int n, double d, const Vec2& anchor) {
  std::vector<Vec2> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k)
    out.push_back(anchor + Vec2((k - 0.5 * (n - 1)) * d, 0.0));
  return out;
}

std::vector<Vec2> v_points(int n, double d, double half_angle_deg, const Vec2& anchor) {
  const double a = half_angle_deg * M_PI / 180.0;
  const Vec2 left(-std::sin(a), std::cos(a));
  const Vec2 right(std::sin(a), std::cos(a));
  std::vector<Vec2> out{anchor};
  int depth_left = 0, depth_right = 0;
  while (static_cast<int>(out.size()) < n) {
    if (depth_left <= depth_right) out.push_back(anchor + (++depth_left) * d * left);
    else out.push_back(anchor + (++depth_right) * d * right);
  }
  return out;
}

std::vector<Vec2> lattice_points(int n, double d, const Vec2& anchor) {
  // Triangular lattice spanned by (d,0) and (d/2, d*sqrt(3)/2); take the n
  // sites nearest the anchor. |i*v1 + j*v2|^2 = d^2*(i^2 + i*j + j^2), so the
  // ordering key is exact in integers; angle breaks radius ties.
  struct Site {
    long key;
    double angle;
    int i, j;
  };
  std::vector<Site> sites;
  const int m = static_cast<int>(std::ceil(std::sqrt(n))) + 2;
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const long key = static_cast<long>(i) * i + static_cast<long>(i) * j +
                       static_cast<long>(j) * j;
      const double x = i + 0.5 * j;
      const double y = std::sqrt(3.0) / 2.0 * j;
      sites.push_back({key, std::atan2(y, x), i, j});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.angle != b.angle) return a.angle < b.angle;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<Vec2> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const auto& s = sites[k];
    out.push_back(anchor + d * Vec2(s.i + 0.5 * s.j, std::sqrt(3.0) / 2.0 * s.j));
  }
  return out;
}

}  // namespace

std::vector<Vec2> target_positions(const FormationSpec& spec, const Vec2& anchor) {
  validate(spec);
  const int n = spec.agent_count;
  const double d = spec.desired_distance;
  switch (spec.shape) {
    case Shape::Circle: return circle_points(n, d, anchor);
    case Shape::Triangle: return triangle_points(d, anchor);
    case Shape::Line: return line_points(n, d, anchor);
    case Shape::VShape: return v_points(n, d, spec.v_half_angle_deg, anchor);
    case Shape::AlphaLattice: return lattice_points(n, d, anchor);
    case Shape::PairDistance:
      return {anchor + Vec2(-0.5 * d, 0.0), anchor + Vec2(0.5 * d, 0.0)};
  }
  throw std::logic_error("unhandled shape");
}

double mae(const std::vector<Vec2>& positions, double desired_distance) {
  if (positions.size() < 2)
    throw std::invalid_argument("mae needs at least 2 agents");
  if (!(desired_distance > 0))
    throw std::invalid_argument("desired_distance must be positive");
  double total = 0.0;
  for (size_t i = 0; i < positions.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < positions.size(); ++j) {
      if (j == i) continue;
      nearest = std::min(nearest, (positions[j] - positions[i]).norm());
    }
    total += std::abs(nearest - desired_distance);
  }
  return total / static_cast<double>(positions.size());
}

}  // namespace flocksim
