#include "riskland/risk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riskland {

void RiskTable::set(std::uint8_t id, std::uint8_t risk, const std::string& name) {
  if (risk > kMaxRisk) throw std::invalid_argument("risk score out of range [0, 4]");
  if (risk_by_id.size() <= id) {
    risk_by_id.resize(id + 1, kNoEntry);
    name_by_id.resize(id + 1);
  }
  risk_by_id[id] = risk;
  name_by_id[id] = name;
}

bool RiskTable::has(std::uint8_t id) const {
  return id < risk_by_id.size() && risk_by_id[id] != kNoEntry;
}

std::uint8_t RiskTable::risk_for(std::uint8_t id) const {
  if (!has(id)) {
    throw std::out_of_range("no risk entry for class id " + std::to_string(int(id)));
  }
  return risk_by_id[id];
}

const std::string& RiskTable::name_for(std::uint8_t id) const {
  if (!has(id)) {
    throw std::out_of_range("no risk entry for class id " + std::to_string(int(id)));
  }
  return name_by_id[id];
}

std::vector<std::uint8_t> RiskTable::known_ids() const {
  std::vector<std::uint8_t> ids;
  for (std::size_t id = 0; id < risk_by_id.size(); ++id) {
    if (risk_by_id[id] != kNoEntry) ids.push_back(static_cast<std::uint8_t>(id));
  }
  return ids;
}

RiskGrid risk_from_labels(const LabelGrid& labels, const RiskTable& table) {
  RiskGrid out(labels.width(), labels.height());
  const std::uint8_t* src = labels.data();
  std::uint8_t* dst = out.data();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    dst[i] = table.risk_for(src[i]);
  }
  return out;
}

GlobalRiskMap::GlobalRiskMap(int width, int height, Vec2 origin_m, double resolution,
                             std::uint8_t default_risk)
    : grid_(width, height, 0),
      seen_(width, height, 0),
      origin_m_(origin_m),
      resolution_(resolution),
      default_risk_(default_risk) {
  if (resolution <= 0.0) throw std::invalid_argument("map resolution must be positive");
  if (default_risk > kMaxRisk) throw std::invalid_argument("default risk out of range [0, 4]");
}

void accumulate_global(GlobalRiskMap& global, const RiskGrid& local, const GroundTransform& t) {
  const int lw = local.width();
  const int lh = local.height();
  const Vec2 origin_px = global.origin_px();

  // Bounding box of the projected local extent, in map cells, padded so that
  // every cell whose inverse projection rounds into the local rectangle is
  // covered.
  const Vec2 corners[4] = {Vec2(-0.5, -0.5), Vec2(lw - 0.5, -0.5), Vec2(-0.5, lh - 0.5),
                           Vec2(lw - 0.5, lh - 0.5)};
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  for (const Vec2& c : corners) {
    const Vec2 g = project_local_to_global(c, t) - origin_px;
    min_x = std::min(min_x, g.x());
    min_y = std::min(min_y, g.y());
    max_x = std::max(max_x, g.x());
    max_y = std::max(max_y, g.y());
  }
  const int pad = 2;
  const long bx0 = static_cast<long>(std::floor(min_x)) - pad;
  const long by0 = static_cast<long>(std::floor(min_y)) - pad;
  const long bx1 = static_cast<long>(std::ceil(max_x)) + pad;
  const long by1 = static_cast<long>(std::ceil(max_y)) + pad;

  const int x0 = static_cast<int>(std::clamp<long>(bx0, 0, global.width()));
  const int y0 = static_cast<int>(std::clamp<long>(by0, 0, global.height()));
  const int x1 = static_cast<int>(std::clamp<long>(bx1, 0, global.width()));
  const int y1 = static_cast<int>(std::clamp<long>(by1, 0, global.height()));

  // Diagnostics: projected-footprint cells falling outside the map extent.
  const long bbox_area = (bx1 - bx0) * (by1 - by0);
  const long kept_area = static_cast<long>(x1 - x0) * static_cast<long>(y1 - y0);
  global.clipped_cells_ += static_cast<std::uint64_t>(std::max(0L, bbox_area - kept_area));

  // Inverse map: global cell -> local pixel. For the similarity transforms
  // the simulator produces this is affine, so walk it incrementally.
  const Eigen::Matrix3d hinv = t.homography.inverse();
  RiskGrid& grid = global.grid_;
  MaskGrid& seen = global.seen_;
  for (int gy = y0; gy < y1; ++gy) {
    Vec3 v = hinv * Vec3((x0 + origin_px.x()) * t.scale, (gy + origin_px.y()) * t.scale, 1.0);
    const Vec3 dv = hinv.col(0) * t.scale;
    std::uint8_t* grow = grid.row(gy);
    std::uint8_t* srow = seen.row(gy);
    for (int gx = x0; gx < x1; ++gx, v += dv) {
      if (std::abs(v.z()) < 1e-12) continue;
      const int px = static_cast<int>(std::lround(v.x() / v.z()));
      const int py = static_cast<int>(std::lround(v.y() / v.z()));
      if (px < 0 || px >= lw || py < 0 || py >= lh) continue;
      const std::uint8_t value = local(px, py);
      if (value > grow[gx]) grow[gx] = value;
      srow[gx] = 1;
    }
  }
}

RiskGrid local_view(const GlobalRiskMap& global, const VehiclePose& pose, const CameraModel& cam) {
  const GroundTransform t = ground_transform_from_pose(pose, cam, global.resolution());
  const Vec2 origin_px = global.origin_px();

  RiskGrid out(cam.width, cam.height);
  // Forward map is affine for nadir poses; walk rows incrementally.
  const Eigen::Matrix3d& h = t.homography;
  bool any_inside = false;
  for (int y = 0; y < cam.height; ++y) {
    Vec3 v = h * Vec3(0.0, y, 1.0);
    const Vec3 dv = h.col(0);
    std::uint8_t* row = out.row(y);
    for (int x = 0; x < cam.width; ++x, v += dv) {
      const double w = v.z();
      const double gx = v.x() / (w * t.scale) - origin_px.x();
      const double gy = v.y() / (w * t.scale) - origin_px.y();
      const int cx = static_cast<int>(std::lround(gx));
      const int cy = static_cast<int>(std::lround(gy));
      if (cx >= 0 && cx < global.width() && cy >= 0 && cy < global.height()) {
        row[x] = global.value_or_default(cx, cy);
        any_inside = true;
      } else {
        row[x] = global.default_risk();
      }
    }
  }
  if (!any_inside) {
    throw std::runtime_error("local view has no overlap with the global map extent");
  }
  return out;
}

}  // namespace riskland
