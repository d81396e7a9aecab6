#include "flocksim/alpha_lattice.hpp"

#include <cstdio>
#include <limits>

namespace flocksim {

void validate(const AlphaParams& p) {
  if (!(p.sigma_eps > 0 && p.sigma_eps < 1))
    throw std::invalid_argument("sigma_eps must be in (0,1)");
  if (!(p.bump_h > 0 && p.bump_h < 1))
    throw std::invalid_argument("bump_h must be in (0,1)");
  if (!(p.phi_a > 0 && p.phi_a <= p.phi_b))
    throw std::invalid_argument("need 0 < phi_a <= phi_b");
  if (!(p.lattice_distance > 0 && p.lattice_distance < p.interaction_range))
    throw std::invalid_argument("need 0 < lattice_distance < interaction_range");
}

double action_phi_alpha(double z, const AlphaParams& p) {
  validate(p);
  const double r_alpha = sigma_norm(p.interaction_range, p.sigma_eps);
  const double d_alpha = sigma_norm(p.lattice_distance, p.sigma_eps);
  return action_phi_alpha(z, r_alpha, d_alpha, p.bump_h, p.phi_a, p.phi_b);
}

double adjacency(const Vec2& qi, const Vec2& qj, const AlphaParams& p) {
  validate(p);
  const double r_alpha = sigma_norm(p.interaction_range, p.sigma_eps);
  return bump(sigma_norm<double>(qj - qi, p.sigma_eps) / r_alpha, p.bump_h);
}

std::vector<int> neighbors(int i, const WorldState& state, double interaction_range) {
  const AgentState& self = state.agent(i);
  std::vector<int> out;
  for (const auto& a : state.agents) {
    if (a.id == i) continue;
    if ((a.position - self.position).norm() < interaction_range) out.push_back(a.id);
  }
  return out;
}

Vec2 control_gradient_term(int i, const WorldState& state, const AlphaParams& p) {
  const AgentState& self = state.agent(i);
  const double r_alpha = sigma_norm(p.interaction_range, p.sigma_eps);
  const double d_alpha = sigma_norm(p.lattice_distance, p.sigma_eps);
  Vec2 u = Vec2::Zero();
  for (int j : neighbors(i, state, p.interaction_range)) {
    const AgentState& other = state.agent(j);
    const double z = sigma_norm<double>(other.position - self.position, p.sigma_eps);
    u += action_phi_alpha(z, r_alpha, d_alpha, p.bump_h, p.phi_a, p.phi_b) *
         sigma_grad<double>(self.position, other.position, p.sigma_eps);
  }
  return u;
}

Vec2 control_consensus_term(int i, const WorldState& state, const AlphaParams& p) {
  const AgentState& self = state.agent(i);
  Vec2 u = Vec2::Zero();
  for (int j : neighbors(i, state, p.interaction_range)) {
    const AgentState& other = state.agent(j);
    u += adjacency(self.position, other.position, p) * (other.velocity - self.velocity);
  }
  return u;
}

Vec2 control_input(int i, const WorldState& state, const AlphaParams& p) {
  validate(p);
  return control_gradient_term(i, state, p) + control_consensus_term(i, state, p);
}

namespace {

// Nearest other agent by Euclidean distance, ties to the lowest id.
int nearest_other(int i, const WorldState& state) {
  const AgentState& self = state.agent(i);
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& a : state.agents) {
    if (a.id == i) continue;
    const double d = (a.position - self.position).norm();
    if (d < best_d) {
      best_d = d;
      best = a.id;
    }
  }
  return best;
}

}  // namespace

Decision oracle_flocker_decide(int i, const WorldState& state,
                               const OracleFlockerSettings& settings) {
  validate(settings.alpha);
  if (settings.substeps < 1) throw std::invalid_argument("substeps must be >= 1");
  if (!(settings.dt > 0)) throw std::invalid_argument("dt must be positive");

  const AgentState& self = state.agent(i);
  char reason[96];

  const std::vector<int> own_neighbors =
      neighbors(i, state, settings.alpha.interaction_range);
  if (own_neighbors.empty()) {
    const int j = nearest_other(i, state);
    if (j < 0) return {self.position, "no other agents; holding position"};
    const Vec2 to_peer = state.agent(j).position - self.position;
    const double gap = to_peer.norm();
    const double stop =
        0.5 * (settings.alpha.lattice_distance + settings.alpha.interaction_range);
    const double step = std::min(settings.approach_step_cap, 0.5 * (gap - stop));
    if (step <= 0) return {self.position, "no neighbors in range; holding position"};
    std::snprintf(reason, sizeof reason, "no neighbors in range; approaching agent %d", j);
    return {self.position + step * (to_peer / gap), reason};
  }

  // Predict one round for the whole swarm from rest.
  WorldState internal = state;
  for (auto& a : internal.agents) a.velocity = Vec2::Zero();
  for (int s = 0; s < settings.substeps; ++s) {
    std::map<int, Vec2> accel;
    for (const auto& a : internal.agents)
      accel[a.id] = control_input(a.id, internal, settings.alpha);
    internal = integrate_double(internal, accel, settings.dt);
  }
  std::snprintf(reason, sizeof reason, "lattice control step, %d neighbors in range",
                static_cast<int>(own_neighbors.size()));
  return {internal.agent(i).position, reason};
}

}  // namespace flocksim
