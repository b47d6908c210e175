#pragma once

#include <string>

#include "riskland/grid.hpp"

namespace riskland {

// Binary (P5) 8-bit single-channel PGM.
void write_pgm(const std::string& path, const Grid<std::uint8_t>& image);
Grid<std::uint8_t> read_pgm(const std::string& path);

// Risk map rendered for inspection: value * 63 so the 0..4 range spans the
// 8-bit scale, brighter pixels meaning higher risk.
Grid<std::uint8_t> risk_to_image(const RiskGrid& risk);
Grid<std::uint8_t> risk_to_image(const RealGrid& risk);

}  // namespace riskland
