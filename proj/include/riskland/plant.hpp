#pragma once

#include "riskland/control.hpp"
#include "riskland/geometry.hpp"

namespace riskland {

// Emulated-vehicle state.
struct EAVState {
  Vec3 position{0.0, 0.0, 40.0};  // meters
  Vec3 velocity{0.0, 0.0, 0.0};   // m/s
  double time = 0.0;              // seconds
};

struct PlantParams {
  double gravity_mps2 = 9.81;
  double drag_per_s = 0.5;     // linear horizontal drag
  double vz_lag_tau_s = 0.3;   // first-order lag of the vertical rate

  void validate() const;
};

// Semi-implicit Euler step of the point-mass plant: tilt commands produce
// horizontal acceleration g*tan(tilt) with linear drag, the vertical rate
// slews toward z_c with a first-order lag, and z is floored at the ground.
EAVState step_plant(const EAVState& state, const ControlCommand& cmd, double dt,
                    const PlantParams& params);

}  // namespace riskland
