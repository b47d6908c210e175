#include "riskland/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace riskland {

void ExpansionConfig::validate() const {
  if (altitude_threshold_m <= 0.0) throw std::invalid_argument("altitude threshold must be positive");
  if (large_sigma_px <= 0.0 || moderate_sigma_px <= 0.0) {
    throw std::invalid_argument("expansion sigmas must be positive");
  }
  if (kd_gain_px_per_m < 0.0) throw std::invalid_argument("kd gain must be non-negative");
  if (kd_min_px < 1 || kd_min_px % 2 == 0) throw std::invalid_argument("kd_min must be odd and >= 1");
  if (kd_max_px < kd_min_px || kd_max_px % 2 == 0) {
    throw std::invalid_argument("kd_max must be odd and >= kd_min");
  }
}

namespace {

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-0.5 * (i * i) / (sigma * sigma));
    k[i + radius] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

// 1D convolution along x with edge replication, one output row at a time.
void convolve_row(const double* src, double* dst, int n, const std::vector<double>& k) {
  const int radius = static_cast<int>(k.size() / 2);
  const int lo = std::min(radius, n);
  const int hi = std::max(lo, n - radius);
  for (int x = 0; x < lo; ++x) {
    double acc = 0.0;
    for (int i = -radius; i <= radius; ++i) acc += k[i + radius] * src[std::clamp(x + i, 0, n - 1)];
    dst[x] = acc;
  }
  for (int x = lo; x < hi; ++x) {
    double acc = 0.0;
    const double* s = src + x - radius;
    for (std::size_t i = 0; i < k.size(); ++i) acc += k[i] * s[i];
    dst[x] = acc;
  }
  for (int x = hi; x < n; ++x) {
    double acc = 0.0;
    for (int i = -radius; i <= radius; ++i) acc += k[i + radius] * src[std::clamp(x + i, 0, n - 1)];
    dst[x] = acc;
  }
}

}  // namespace

RealGrid gaussian_filter(const RealGrid& map, double sigma_px) {
  if (sigma_px <= 0.0) throw std::invalid_argument("gaussian sigma must be positive");
  const int w = map.width();
  const int h = map.height();
  const std::vector<double> kernel = gaussian_kernel(sigma_px);

  // Horizontal pass.
  RealGrid mid(w, h);
  for (int y = 0; y < h; ++y) convolve_row(map.row(y), mid.row(y), w, kernel);

  // Vertical pass over transposed strips.
  RealGrid out(w, h);
  std::vector<double> col(h), colout(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) col[y] = mid(x, y);
    convolve_row(col.data(), colout.data(), h, kernel);
    for (int y = 0; y < h; ++y) out(x, y) = colout[y];
  }
  return out;
}

RealGrid gaussian_filter(const RiskGrid& map, double sigma_px) {
  RealGrid real(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y) {
    const std::uint8_t* src = map.row(y);
    double* dst = real.row(y);
    for (int x = 0; x < map.width(); ++x) dst[x] = src[x];
  }
  return gaussian_filter(real, sigma_px);
}

namespace {

// Sliding max along one line with the window clipped at the ends, which is
// exactly the edge-replicated square dilation.
void max_line(const std::uint8_t* src, std::uint8_t* dst, int n, int radius) {
  for (int x = 0; x < n; ++x) {
    const int lo = std::max(0, x - radius);
    const int hi = std::min(n - 1, x + radius);
    std::uint8_t m = src[lo];
    for (int i = lo + 1; i <= hi; ++i) m = std::max(m, src[i]);
    dst[x] = m;
  }
}

}  // namespace

RiskGrid dilate(const RiskGrid& map, int kd_px) {
  if (kd_px < 1 || kd_px % 2 == 0) {
    throw std::invalid_argument("dilation kernel size must be odd and >= 1");
  }
  const int radius = kd_px / 2;
  if (radius == 0) return map;

  const int w = map.width();
  const int h = map.height();
  RiskGrid mid(w, h);
  for (int y = 0; y < h; ++y) max_line(map.row(y), mid.row(y), w, radius);

  RiskGrid out(w, h);
  std::vector<std::uint8_t> col(h), colout(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) col[y] = mid(x, y);
    max_line(col.data(), colout.data(), h, radius);
    for (int y = 0; y < h; ++y) out(x, y) = colout[y];
  }
  return out;
}

int kd_for_altitude(double z_m, const ExpansionConfig& cfg) {
  if (z_m < 0.0) throw std::invalid_argument("altitude must be non-negative");
  const double raw = cfg.kd_gain_px_per_m * z_m;
  // Nearest odd size, ties toward the larger (more conservative) kernel.
  const int odd = 2 * static_cast<int>(std::floor(raw / 2.0)) + 1;
  return std::clamp(odd, cfg.kd_min_px, cfg.kd_max_px);
}

RealGrid expand(const RiskGrid& map, double z_m, const ExpansionConfig& cfg) {
  if (map.empty()) throw std::invalid_argument("cannot expand an empty map");
  if (z_m > cfg.altitude_threshold_m) {
    return gaussian_filter(map, cfg.large_sigma_px);
  }
  return gaussian_filter(dilate(map, kd_for_altitude(z_m, cfg)), cfg.moderate_sigma_px);
}

}  // namespace riskland
