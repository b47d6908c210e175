#include "riskland/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace riskland {

void write_pgm(const std::string& path, const Grid<std::uint8_t>& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write image: " + path);
  out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.data()), static_cast<std::streamsize>(image.size()));
  if (!out) throw std::runtime_error("short write: " + path);
}

Grid<std::uint8_t> read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open image: " + path);

  auto next_token = [&in, &path]() {
    std::string tok;
    while (in >> tok) {
      if (tok.front() == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw std::runtime_error("truncated PGM header: " + path);
  };

  if (next_token() != "P5") throw std::runtime_error("not a binary PGM (P5): " + path);
  const int w = std::stoi(next_token());
  const int h = std::stoi(next_token());
  const int maxval = std::stoi(next_token());
  if (w <= 0 || h <= 0 || maxval != 255) throw std::runtime_error("unsupported PGM: " + path);
  in.get();  // single whitespace after maxval

  Grid<std::uint8_t> image(w, h);
  in.read(reinterpret_cast<char*>(image.data()), static_cast<std::streamsize>(image.size()));
  if (in.gcount() != static_cast<std::streamsize>(image.size())) {
    throw std::runtime_error("truncated PGM data: " + path);
  }
  return image;
}

Grid<std::uint8_t> risk_to_image(const RiskGrid& risk) {
  Grid<std::uint8_t> img(risk.width(), risk.height());
  for (std::size_t i = 0; i < risk.size(); ++i) {
    img.data()[i] = static_cast<std::uint8_t>(risk.data()[i] * 63);
  }
  return img;
}

Grid<std::uint8_t> risk_to_image(const RealGrid& risk) {
  Grid<std::uint8_t> img(risk.width(), risk.height());
  for (std::size_t i = 0; i < risk.size(); ++i) {
    const double v = std::clamp(risk.data()[i] * 63.0, 0.0, 255.0);
    img.data()[i] = static_cast<std::uint8_t>(std::lround(v));
  }
  return img;
}

}  // namespace riskland
