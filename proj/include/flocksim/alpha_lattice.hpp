#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "flocksim/world.hpp"

namespace flocksim {

// Parameters of the alpha-lattice control law. sigma_eps is the smooth-norm
// parameter; it is unrelated to the desired formation spacing even though
// both are often written with the same greek letter.
struct AlphaParams {
  double sigma_eps = 0.1;         // in (0,1)
  double interaction_range = 6.0; // r: neighbors are strictly closer than this
  double lattice_distance = 5.0;  // d: equilibrium spacing, 0 < d < r
  double bump_h = 0.2;            // in (0,1)
  double phi_a = 5.0;             // 0 < phi_a <= phi_b
  double phi_b = 5.0;
};

void validate(const AlphaParams& p);  // throws std::invalid_argument

inline AlphaParams default_alpha_params(double lattice_distance,
                                        double range_multiplier = 1.2) {
  AlphaParams p;
  p.lattice_distance = lattice_distance;
  p.interaction_range = range_multiplier * lattice_distance;
  validate(p);  // rejects non-positive spacing or a range not beyond it
  return p;
}

template <typename S>
using Vec2T = Eigen::Matrix<S, 2, 1>;

// Smooth norm-like map (1/eps)(sqrt(1 + eps*|z|^2) - 1): differentiable at 0,
// monotone in |z|.
template <typename S>
S sigma_norm(const Vec2T<S>& z, S sigma_eps) {
  return (std::sqrt(S(1) + sigma_eps * z.squaredNorm()) - S(1)) / sigma_eps;
}

template <typename S>
S sigma_norm(S length, S sigma_eps) {
  return (std::sqrt(S(1) + sigma_eps * length * length) - S(1)) / sigma_eps;
}

// Gradient direction of the smooth norm: (qj - qi)/sqrt(1 + eps*|qj - qi|^2).
template <typename S>
Vec2T<S> sigma_grad(const Vec2T<S>& qi, const Vec2T<S>& qj, S sigma_eps) {
  const Vec2T<S> z = qj - qi;
  return z / std::sqrt(S(1) + sigma_eps * z.squaredNorm());
}

// Finite-support window: 1 on [0,h), a half-cosine fade on [h,1], 0 beyond 1.
template <typename S>
S bump(S z, S h) {
  if (z < S(0)) throw std::invalid_argument("bump: z must be nonnegative");
  if (z < h) return S(1);
  if (z > S(1)) return S(0);
  const S pi = std::acos(S(-1));
  return S(0.5) * (S(1) + std::cos(pi * (z - h) / (S(1) - h)));
}

// Uneven sigmoid 0.5*[(a+b)*s1(z+c) + (a-b)], s1(y) = y/sqrt(1+y^2),
// c = |a-b|/sqrt(4ab); odd around its unique zero, bounded.
template <typename S>
S phi(S z, S a, S b) {
  const S c = std::abs(a - b) / std::sqrt(S(4) * a * b);
  const S y = z + c;
  const S s1 = y / std::sqrt(S(1) + y * y);
  return S(0.5) * ((a + b) * s1 + (a - b));
}

// Pairwise action profile: repulsive below the lattice spacing, attractive
// above it, exactly zero once the windowed argument passes the cut-off.
template <typename S>
S action_phi_alpha(S z, S r_alpha, S d_alpha, S h, S a, S b) {
  return bump(z / r_alpha, h) * phi(z - d_alpha, a, b);
}

double action_phi_alpha(double z, const AlphaParams& p);

// Interaction weight in [0,1]; symmetric, zero at or beyond the range.
double adjacency(const Vec2& qi, const Vec2& qj, const AlphaParams& p);

// Ids strictly within interaction range of agent i, ascending, excluding i.
std::vector<int> neighbors(int i, const WorldState& state, double interaction_range);

// Gradient (spacing) term of the control law.
Vec2 control_gradient_term(int i, const WorldState& state, const AlphaParams& p);
// Velocity-consensus term of the control law.
Vec2 control_consensus_term(int i, const WorldState& state, const AlphaParams& p);
// Full control acceleration; identically zero for an agent with no neighbors.
Vec2 control_input(int i, const WorldState& state, const AlphaParams& p);

struct OracleFlockerSettings {
  AlphaParams alpha;
  int substeps = 20;
  double dt = 0.05;
  // Step cap for the approach move used when an agent has no neighbors (the
  // control law is identically zero there and would never connect the flock).
  double approach_step_cap = 2.5;
};

// Round adapter for the control law: predicts one round of double-integrator
// motion for the whole swarm (internal velocities start at rest so the
// command reflects the potential field, not last round's momentum) and emits
// this agent's predicted position as its command. An agent with no neighbors
// instead closes half the gap toward its nearest flockmate, stopping just
// inside interaction range.
Decision oracle_flocker_decide(int i, const WorldState& state,
                               const OracleFlockerSettings& settings);

}  // namespace flocksim
