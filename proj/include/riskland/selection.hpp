#pragma once

#include <deque>

#include "riskland/geometry.hpp"
#include "riskland/grid.hpp"

namespace riskland {

struct SelectionWeights {
  double alpha = 1.0;  // risk weight
  double beta = 0.05;  // distance weight, per pixel

  void validate() const;
};

// Beta such that the distance term at the image corner matches the maximum
// possible risk term: alpha * r_max / ||corner - principal||.
double auto_beta(double alpha, const CameraModel& cam);

struct PixelPoint {
  int x = 0;
  int y = 0;
  bool operator==(const PixelPoint&) const = default;
};

// V(p) = alpha * rf(p) + beta * ||p - c||.
RealGrid weighted_map(const RealGrid& rf, const Vec2& c, const SelectionWeights& w);

// Global minimizer of V. Ties broken by distance to c, then row-major order.
PixelPoint select_landing_point(const RealGrid& v, const Vec2& c);

// Queue of recent candidate landing points plus the descent-consistency
// counter. Candidates are stored in the world-anchored frame so that entries
// from older poses are re-projected into the current image before averaging.
class LandingTracker {
 public:
  LandingTracker(int queue_length, int required_steps, double safety_radius_m);

  // Appends p_star (current image pixels), evicts beyond the queue length,
  // and returns the temporal average expressed in the current image frame.
  Vec2 push_and_average(const Vec2& p_star_px, const GroundTransform& current);

  struct Consistency {
    int counter = 0;
    bool is_consistent = false;
    double tau_px = 0.0;
  };

  // Advances the safety-area check: the counter grows while the averaged
  // point stays strictly within tau(z) of the image center and resets to
  // zero on any violation.
  Consistency update_consistency(const Vec2& p_bar_px, const Vec2& c, const VehiclePose& pose,
                                 const CameraModel& cam);

  int counter() const { return counter_; }
  int queue_length() const { return queue_length_; }
  std::size_t queue_size() const { return world_points_.size(); }
  double safety_radius_m() const { return safety_radius_m_; }

 private:
  std::deque<Vec2> world_points_;  // global-frame pixels
  int queue_length_;
  int required_steps_;
  double safety_radius_m_;
  int counter_ = 0;
};

}  // namespace riskland
