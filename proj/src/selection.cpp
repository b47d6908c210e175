#include "riskland/selection.hpp"

#include <cmath>
#include <stdexcept>

#include "riskland/risk.hpp"

namespace riskland {

void SelectionWeights::validate() const {
  if (alpha < 0.0 || beta < 0.0 || alpha + beta <= 0.0) {
    throw std::invalid_argument("selection weights must be non-negative with alpha + beta > 0");
  }
}

double auto_beta(double alpha, const CameraModel& cam) {
  const double corner = (Vec2(0.0, 0.0) - cam.principal).norm();
  return alpha * kMaxRisk / corner;
}

RealGrid weighted_map(const RealGrid& rf, const Vec2& c, const SelectionWeights& w) {
  if (c.x() < 0 || c.x() >= rf.width() || c.y() < 0 || c.y() >= rf.height()) {
    throw std::invalid_argument("weighted map center must lie inside the grid");
  }
  RealGrid v(rf.width(), rf.height());
  for (int y = 0; y < rf.height(); ++y) {
    const double dy2 = (y - c.y()) * (y - c.y());
    const double* src = rf.row(y);
    double* dst = v.row(y);
    for (int x = 0; x < rf.width(); ++x) {
      const double dx = x - c.x();
      dst[x] = w.alpha * src[x] + w.beta * std::sqrt(dx * dx + dy2);
    }
  }
  return v;
}

PixelPoint select_landing_point(const RealGrid& v, const Vec2& c) {
  if (v.empty()) throw std::invalid_argument("cannot select from an empty grid");
  PixelPoint best{0, 0};
  double best_value = v(0, 0);
  double best_d2 = (Vec2(0, 0) - c).squaredNorm();
  for (int y = 0; y < v.height(); ++y) {
    const double* row = v.row(y);
    for (int x = 0; x < v.width(); ++x) {
      const double value = row[x];
      if (value > best_value) continue;
      if (value < best_value) {
        best = {x, y};
        best_value = value;
        best_d2 = (Vec2(x, y) - c).squaredNorm();
        continue;
      }
      // Equal value: prefer the pixel closer to c; row-major order keeps the
      // earlier pixel when the distances also tie.
      const double d2 = (Vec2(x, y) - c).squaredNorm();
      if (d2 < best_d2) {
        best = {x, y};
        best_d2 = d2;
      }
    }
  }
  return best;
}

LandingTracker::LandingTracker(int queue_length, int required_steps, double safety_radius_m)
    : queue_length_(queue_length), required_steps_(required_steps), safety_radius_m_(safety_radius_m) {
  if (queue_length < 1) throw std::invalid_argument("tracker queue length must be >= 1");
  if (required_steps < 1) throw std::invalid_argument("tracker required steps must be >= 1");
  if (safety_radius_m <= 0.0) throw std::invalid_argument("safety radius must be positive");
}

Vec2 LandingTracker::push_and_average(const Vec2& p_star_px, const GroundTransform& current) {
  world_points_.push_back(project_local_to_global(p_star_px, current));
  if (static_cast<int>(world_points_.size()) > queue_length_) world_points_.pop_front();

  Vec2 sum(0.0, 0.0);
  for (const Vec2& g : world_points_) sum += project_global_to_local(g, current);
  return sum / static_cast<double>(world_points_.size());
}

LandingTracker::Consistency LandingTracker::update_consistency(const Vec2& p_bar_px, const Vec2& c,
                                                               const VehiclePose& pose,
                                                               const CameraModel& cam) {
  Consistency result;
  result.tau_px = meters_to_pixels(safety_radius_m_, pose, cam);
  if ((p_bar_px - c).norm() < result.tau_px) {
    ++counter_;
  } else {
    counter_ = 0;
  }
  result.counter = counter_;
  result.is_consistent = counter_ >= required_steps_;
  return result;
}

}  // namespace riskland
