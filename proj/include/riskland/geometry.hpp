#pragma once

#include <Eigen/Dense>

namespace riskland {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Pinhole intrinsics of the downward-facing camera.
struct CameraModel {
  double focal_px = 320.0;
  Vec2 principal{64.0, 48.0};
  int width = 128;
  int height = 96;

  void validate() const;
};

// World-frame vehicle state relevant to the ground projection. The optical
// axis is normal to the landing plane, so only altitude and yaw enter the
// image-to-ground mapping.
struct VehiclePose {
  Vec3 position{0.0, 0.0, 40.0};  // meters; z = altitude above the landing plane
  double yaw = 0.0;               // radians
};

// Maps local image pixels into the world-anchored global grid frame:
//
//   p_global = (1 / scale) * normalize(homography * [p; 1])
//
// where normalize() divides by the homogeneous w component. The global frame
// puts cell (0, 0) at world (0, 0) with the map resolution in meters/cell.
// scale is the lambda_k factor: global-map pixels per local pixel at the
// current altitude.
struct GroundTransform {
  Eigen::Matrix3d homography = Eigen::Matrix3d::Identity();
  double scale = 1.0;
};

// Builds the transform for a nadir camera at the given pose. The resulting
// homography is a similarity (scale + yaw rotation + translation).
GroundTransform ground_transform_from_pose(const VehiclePose& pose, const CameraModel& cam,
                                           double global_resolution);

Vec2 project_local_to_global(const Vec2& p, const GroundTransform& t);
Vec2 project_global_to_local(const Vec2& p, const GroundTransform& t);

// Pixel radius subtended by a metric radius at the current altitude.
double meters_to_pixels(double r_m, const VehiclePose& pose, const CameraModel& cam);

// Ground rectangle seen by the camera, centered under the vehicle.
struct GroundRect {
  Vec2 center;      // meters
  double width_m = 0.0;
  double height_m = 0.0;
  double yaw = 0.0;
};

GroundRect footprint_on_ground(const VehiclePose& pose, const CameraModel& cam);

}  // namespace riskland
