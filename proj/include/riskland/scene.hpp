#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riskland/geometry.hpp"
#include "riskland/grid.hpp"

namespace riskland {

struct Waypoint {
  double t = 0.0;  // seconds
  Vec2 pos{0.0, 0.0};  // meters
};

// Axis-aligned rectangular obstacle moving along a piecewise-linear path.
// Positions before the first and after the last waypoint clamp to the ends.
struct SceneObstacle {
  std::uint8_t class_id = 0;
  double width_m = 1.0;
  double height_m = 1.0;
  std::vector<Waypoint> path;

  Vec2 position_at(double t) const;
};

struct SceneClass {
  std::uint8_t id = 0;
  std::string name;
};

// World model: a class-id raster anchored at world (0, 0) plus dynamic
// obstacles composited over it. Ground truth for evaluation is the oracle
// composite itself (independent of any segmentation noise).
struct Scene {
  std::string name;
  LabelGrid base_labels;
  double resolution = 0.05;  // meters per raster cell
  double duration_s = 120.0;
  std::vector<SceneClass> classes;
  std::vector<SceneObstacle> obstacles;
  bool ground_truth_available = true;

  double width_m() const { return base_labels.width() * resolution; }
  double height_m() const { return base_labels.height() * resolution; }

  void validate() const;
};

// Samples the composite (base raster + obstacles at time t) over the camera
// footprint at image resolution. Obstacles overwrite base classes; when
// obstacles overlap, the one listed last wins. Samples outside the raster
// replicate the border.
LabelGrid render_labels(const Scene& scene, const VehiclePose& pose, const CameraModel& cam,
                        double t);

// Paints an axis-aligned metric rectangle into the raster (generator and
// test helper).
void fill_rect(LabelGrid& labels, double resolution, const Vec2& min_m, const Vec2& max_m,
               std::uint8_t class_id);

// Manifest I/O. save_scene writes <dir>/<stem>.ini plus <stem>_labels.pgm;
// load_scene resolves the raster path relative to the manifest.
void save_scene(const Scene& scene, const std::string& dir, const std::string& stem);
Scene load_scene(const std::string& manifest_path);

}  // namespace riskland
