#include "riskland/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riskland {

void ControlGains::validate() const {
  if (kp_x < 0 || kd_x < 0 || kp_y < 0 || kd_y < 0 || kp_z < 0 || kd_z < 0) {
    throw std::invalid_argument("control gains must be non-negative");
  }
  if (delta_z_m <= 0) throw std::invalid_argument("descent step must be positive");
  if (max_tilt_rad <= 0 || max_vz_mps <= 0) {
    throw std::invalid_argument("saturation bounds must be positive");
  }
  if (deriv_filter_alpha < 0 || deriv_filter_alpha > 1) {
    throw std::invalid_argument("derivative filter coefficient must lie in [0, 1]");
  }
}

std::pair<double, double> horizontal_command(double dx_px, double dy_px, double dx_rate,
                                             double dy_rate, const ControlGains& g) {
  const double phi = std::clamp(g.kp_x * dx_px + g.kd_x * dx_rate, -g.max_tilt_rad, g.max_tilt_rad);
  const double theta =
      std::clamp(g.kp_y * dy_px + g.kd_y * dy_rate, -g.max_tilt_rad, g.max_tilt_rad);
  return {phi, theta};
}

double update_desired_altitude(double z_d, bool is_consistent, const ControlGains& g) {
  if (z_d < 0) throw std::invalid_argument("desired altitude must be non-negative");
  if (!is_consistent) return z_d;
  return std::max(0.0, z_d - g.delta_z_m);
}

double vertical_command(double z_d, double z, double z_rate, const ControlGains& g) {
  return std::clamp(g.kp_z * (z_d - z) - g.kd_z * z_rate, -g.max_vz_mps, g.max_vz_mps);
}

double DerivativeFilter::update(double value, double dt) {
  if (dt <= 0) throw std::invalid_argument("derivative filter needs dt > 0");
  if (!primed_) {
    primed_ = true;
    prev_value_ = value;
    state_ = 0.0;
    return 0.0;
  }
  const double raw = (value - prev_value_) / dt;
  prev_value_ = value;
  state_ = alpha_ * state_ + (1.0 - alpha_) * raw;
  return state_;
}

void DerivativeFilter::reset() {
  primed_ = false;
  prev_value_ = 0.0;
  state_ = 0.0;
}

}  // namespace riskland
