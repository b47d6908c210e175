#include "riskland/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace riskland {

void CameraModel::validate() const {
  if (focal_px <= 0.0) throw std::invalid_argument("camera focal length must be positive");
  if (width <= 0 || height <= 0) throw std::invalid_argument("camera image size must be positive");
  if (principal.x() <= 0.0 || principal.x() >= width || principal.y() <= 0.0 ||
      principal.y() >= height) {
    throw std::invalid_argument("principal point must lie strictly inside the image");
  }
}

GroundTransform ground_transform_from_pose(const VehiclePose& pose, const CameraModel& cam,
                                           double global_resolution) {
  if (pose.position.z() <= 0.0) {
    throw std::invalid_argument("degenerate ground transform: altitude must be positive");
  }
  if (global_resolution <= 0.0) {
    throw std::invalid_argument("global resolution must be positive");
  }

  const double lam = (pose.position.z() / cam.focal_px) / global_resolution;
  const Eigen::Matrix2d rot = Eigen::Rotation2Dd(pose.yaw).toRotationMatrix();

  // Chosen so that (1/lam) * normalize(H p) lands exactly on the pinhole
  // ground projection expressed in grid cells:
  //   g(p) = lam * R(yaw) * (p - principal) + position_xy / resolution
  const Eigen::Matrix2d lin = lam * lam * rot;
  const Vec2 t_px = pose.position.head<2>() / global_resolution;
  const Vec2 b = lam * t_px - lin * cam.principal;

  GroundTransform t;
  t.scale = lam;
  t.homography << lin(0, 0), lin(0, 1), b.x(),
                  lin(1, 0), lin(1, 1), b.y(),
                  0.0, 0.0, 1.0;
  return t;
}

Vec2 project_local_to_global(const Vec2& p, const GroundTransform& t) {
  const Vec3 v = t.homography * Vec3(p.x(), p.y(), 1.0);
  if (std::abs(v.z()) < 1e-12) {
    throw std::domain_error("point projects to the plane at infinity");
  }
  return Vec2(v.x() / v.z(), v.y() / v.z()) / t.scale;
}

Vec2 project_global_to_local(const Vec2& p, const GroundTransform& t) {
  const Vec3 v = t.homography.inverse() * Vec3(p.x() * t.scale, p.y() * t.scale, 1.0);
  if (std::abs(v.z()) < 1e-12) {
    throw std::domain_error("point projects to the plane at infinity");
  }
  return Vec2(v.x() / v.z(), v.y() / v.z());
}

double meters_to_pixels(double r_m, const VehiclePose& pose, const CameraModel& cam) {
  if (pose.position.z() <= 0.0) {
    throw std::invalid_argument("degenerate conversion: altitude must be positive");
  }
  return r_m * cam.focal_px / pose.position.z();
}

GroundRect footprint_on_ground(const VehiclePose& pose, const CameraModel& cam) {
  if (pose.position.z() <= 0.0) {
    throw std::invalid_argument("footprint undefined at zero altitude");
  }
  const double gsd = pose.position.z() / cam.focal_px;  // meters per local pixel
  GroundRect rect;
  rect.center = pose.position.head<2>();
  rect.width_m = cam.width * gsd;
  rect.height_m = cam.height * gsd;
  rect.yaw = pose.yaw;
  return rect;
}

}  // namespace riskland
