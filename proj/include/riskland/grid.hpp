#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace riskland {

// Row-major 2D array. (x, y) indexing, x = column, y = row.
template <class T>
class Grid {
 public:
  Grid() = default;

  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height), cells_(checked_size(width, height), fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

  T& operator()(int x, int y) { return cells_[static_cast<std::size_t>(y) * width_ + x]; }
  const T& operator()(int x, int y) const { return cells_[static_cast<std::size_t>(y) * width_ + x]; }

  T* row(int y) { return cells_.data() + static_cast<std::size_t>(y) * width_; }
  const T* row(int y) const { return cells_.data() + static_cast<std::size_t>(y) * width_; }

  T* data() { return cells_.data(); }
  const T* data() const { return cells_.data(); }

  void fill(T value) { cells_.assign(cells_.size(), value); }

  bool operator==(const Grid&) const = default;

 private:
  static std::size_t checked_size(int width, int height) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("grid dimensions must be positive");
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> cells_;
};

using LabelGrid = Grid<std::uint8_t>;  // semantic class ids
using RiskGrid = Grid<std::uint8_t>;   // integer risk scores in [0, 4]
using RealGrid = Grid<double>;         // filtered risk maps, weighted maps
using MaskGrid = Grid<std::uint8_t>;   // 0/1 masks

}  // namespace riskland
