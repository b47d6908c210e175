#pragma once

#include <utility>

namespace riskland {

struct ControlGains {
  double kp_x = 0.0008;  // rad per pixel
  double kd_x = 0.0004;  // rad*s per pixel
  double kp_y = 0.0008;
  double kd_y = 0.0004;
  double kp_z = 0.8;  // 1/s
  double kd_z = 0.3;
  double delta_z_m = 0.5;       // descent step
  double max_tilt_rad = 0.3;    // roll/pitch saturation
  double max_vz_mps = 2.0;      // vertical-rate saturation
  double deriv_filter_alpha = 0.5;

  void validate() const;
};

struct ControlCommand {
  double phi_c = 0.0;    // rad
  double theta_c = 0.0;  // rad
  double z_c = 0.0;      // m/s vertical-rate command
};

// PD roll/pitch commands from pixel errors of the averaged landing point
// relative to the image center. Error rates are estimated by the caller.
std::pair<double, double> horizontal_command(double dx_px, double dy_px, double dx_rate,
                                             double dy_rate, const ControlGains& g);

// Decrements the desired altitude by one descent step while the safety-area
// condition has held; otherwise leaves it unchanged. Floored at zero.
double update_desired_altitude(double z_d, bool is_consistent, const ControlGains& g);

// PD vertical-rate command toward the desired altitude.
double vertical_command(double z_d, double z, double z_rate, const ControlGains& g);

// Backward finite difference with a one-pole low-pass on the result.
class DerivativeFilter {
 public:
  explicit DerivativeFilter(double alpha = 0.5) : alpha_(alpha) {}

  double update(double value, double dt);
  void reset();

 private:
  double alpha_;
  bool primed_ = false;
  double prev_value_ = 0.0;
  double state_ = 0.0;
};

}  // namespace riskland
