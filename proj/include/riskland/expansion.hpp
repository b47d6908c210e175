#pragma once

#include "riskland/grid.hpp"

namespace riskland {

// Altitude-dependent risk expansion: one large Gaussian above the altitude
// threshold, dilation followed by a moderate Gaussian below it.
struct ExpansionConfig {
  double altitude_threshold_m = 30.0;
  double large_sigma_px = 15.0;
  double moderate_sigma_px = 5.0;
  double kd_gain_px_per_m = 0.5;
  int kd_min_px = 3;
  int kd_max_px = 21;

  void validate() const;
};

// 2D Gaussian convolution, kernel truncated at 3*sigma (odd size, renormalized),
// borders handled by edge replication. Implemented separably.
RealGrid gaussian_filter(const RealGrid& map, double sigma_px);
RealGrid gaussian_filter(const RiskGrid& map, double sigma_px);

// Per-pixel maximum over the kd x kd square neighborhood, edge-replicated.
RiskGrid dilate(const RiskGrid& map, int kd_px);

// Dilation kernel size for the current altitude: a linear schedule rounded
// to the nearest odd size and clamped to [kd_min, kd_max].
int kd_for_altitude(double z_m, const ExpansionConfig& cfg);

// Full expansion step producing the filtered risk map.
RealGrid expand(const RiskGrid& map, double z_m, const ExpansionConfig& cfg);

}  // namespace riskland
