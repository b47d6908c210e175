#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riskland/geometry.hpp"
#include "riskland/grid.hpp"

namespace riskland {

constexpr int kMaxRisk = 4;

// Class id -> risk score lookup. Ids are small integers; 255 marks a gap.
struct RiskTable {
  static constexpr std::uint8_t kNoEntry = 255;

  std::vector<std::uint8_t> risk_by_id;
  std::vector<std::string> name_by_id;

  void set(std::uint8_t id, std::uint8_t risk, const std::string& name);
  bool has(std::uint8_t id) const;
  std::uint8_t risk_for(std::uint8_t id) const;  // throws on unknown id
  const std::string& name_for(std::uint8_t id) const;
  std::vector<std::uint8_t> known_ids() const;
};

// Per-pixel table lookup: labels -> integer risk scores.
RiskGrid risk_from_labels(const LabelGrid& labels, const RiskTable& table);

// World-anchored risk memory. Stores the raw running maximum of every
// observation (0 until a cell is first touched); value_or_default() reports
// the configured default for never-seen cells so consumers are not lured
// onto unobserved ground.
class GlobalRiskMap {
 public:
  GlobalRiskMap(int width, int height, Vec2 origin_m, double resolution,
                std::uint8_t default_risk = 2);

  int width() const { return grid_.width(); }
  int height() const { return grid_.height(); }
  const Vec2& origin_m() const { return origin_m_; }
  double resolution() const { return resolution_; }
  std::uint8_t default_risk() const { return default_risk_; }

  std::uint8_t raw(int x, int y) const { return grid_(x, y); }
  bool seen(int x, int y) const { return seen_(x, y) != 0; }
  std::uint8_t value_or_default(int x, int y) const {
    return seen_(x, y) ? grid_(x, y) : default_risk_;
  }

  const RiskGrid& raw_grid() const { return grid_; }
  const MaskGrid& seen_mask() const { return seen_; }

  // Global-frame pixel coordinates of the map's (0, 0) cell.
  Vec2 origin_px() const { return origin_m_ / resolution_; }

  std::uint64_t clipped_cells() const { return clipped_cells_; }

 private:
  friend void accumulate_global(GlobalRiskMap&, const RiskGrid&, const GroundTransform&);

  RiskGrid grid_;
  MaskGrid seen_;
  Vec2 origin_m_;
  double resolution_;
  std::uint8_t default_risk_;
  std::uint64_t clipped_cells_ = 0;
};

// Pixel-wise maximum update of the memory over the projected footprint of
// the local map. Target cells are filled by inverse nearest-neighbor lookup
// so magnified footprints leave no holes. Projections falling outside the
// map extent are clipped and tallied.
void accumulate_global(GlobalRiskMap& global, const RiskGrid& local, const GroundTransform& t);

// Portion of the global map inside the camera's current field of view,
// resampled to image dimensions (nearest-neighbor).
RiskGrid local_view(const GlobalRiskMap& global, const VehiclePose& pose, const CameraModel& cam);

}  // namespace riskland
