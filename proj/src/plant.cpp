#include "riskland/plant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riskland {

void PlantParams::validate() const {
  if (gravity_mps2 <= 0) throw std::invalid_argument("gravity must be positive");
  if (drag_per_s < 0) throw std::invalid_argument("drag must be non-negative");
  if (vz_lag_tau_s <= 0) throw std::invalid_argument("vertical lag time constant must be positive");
}

EAVState step_plant(const EAVState& state, const ControlCommand& cmd, double dt,
                    const PlantParams& params) {
  if (dt <= 0) throw std::invalid_argument("plant step needs dt > 0");

  EAVState next = state;

  const double ax = params.gravity_mps2 * std::tan(cmd.phi_c) - params.drag_per_s * state.velocity.x();
  const double ay =
      params.gravity_mps2 * std::tan(cmd.theta_c) - params.drag_per_s * state.velocity.y();
  next.velocity.x() += ax * dt;
  next.velocity.y() += ay * dt;

  const double lag = std::min(1.0, dt / params.vz_lag_tau_s);
  next.velocity.z() += (cmd.z_c - state.velocity.z()) * lag;

  next.position.x() += next.velocity.x() * dt;
  next.position.y() += next.velocity.y() * dt;
  next.position.z() = std::max(0.0, state.position.z() + next.velocity.z() * dt);

  next.time = state.time + dt;
  return next;
}

}  // namespace riskland
