#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pmcl {

/// Single-channel float image, row-major.
struct ImageF {
  int height = 0;
  int width = 0;
  std::vector<float> data;

  ImageF() = default;
  ImageF(int h, int w, float fill = 0.f)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill) {}

  float& at(int i, int j) { return data[static_cast<std::size_t>(i) * width + j]; }
  float at(int i, int j) const { return data[static_cast<std::size_t>(i) * width + j]; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }
};

/// Interleaved RGB float image, row-major, values nominally in [0, 1].
struct ImageRgb {
  int height = 0;
  int width = 0;
  std::vector<float> data;  // 3 floats per pixel

  ImageRgb() = default;
  ImageRgb(int h, int w, float fill = 0.f)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w * 3, fill) {}

  float* px(int i, int j) { return data.data() + (static_cast<std::size_t>(i) * width + j) * 3; }
  const float* px(int i, int j) const {
    return data.data() + (static_cast<std::size_t>(i) * width + j) * 3;
  }
  std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }
};

inline ImageF luminance(const ImageRgb& img) {
  ImageF out(img.height, img.width);
  for (std::size_t p = 0; p < img.pixel_count(); ++p) {
    const float* c = img.data.data() + p * 3;
    out.data[p] = (c[0] + c[1] + c[2]) / 3.f;
  }
  return out;
}

/// Central-difference x gradient (one-sided at the left/right borders).
inline ImageF gradient_x(const ImageF& img) {
  ImageF out(img.height, img.width);
  for (int i = 0; i < img.height; ++i) {
    for (int j = 0; j < img.width; ++j) {
      const int jl = j > 0 ? j - 1 : j;
      const int jr = j < img.width - 1 ? j + 1 : j;
      out.at(i, j) = (img.at(i, jr) - img.at(i, jl)) / static_cast<float>(jr - jl == 0 ? 1 : jr - jl);
    }
  }
  return out;
}

/// Central-difference y gradient (one-sided at the top/bottom borders).
inline ImageF gradient_y(const ImageF& img) {
  ImageF out(img.height, img.width);
  for (int i = 0; i < img.height; ++i) {
    const int iu = i > 0 ? i - 1 : i;
    const int id = i < img.height - 1 ? i + 1 : i;
    const float denom = static_cast<float>(id - iu == 0 ? 1 : id - iu);
    for (int j = 0; j < img.width; ++j) {
      out.at(i, j) = (img.at(id, j) - img.at(iu, j)) / denom;
    }
  }
  return out;
}

/// Bilinear sample on the integer pixel lattice; (x, y) = (column, row).
/// Returns false when the sample footprint leaves [0, W-1] x [0, H-1].
inline bool bilinear(const ImageF& img, double x, double y, float& out) {
  if (!(x >= 0.0 && x <= img.width - 1 && y >= 0.0 && y <= img.height - 1)) return false;
  int x0 = static_cast<int>(std::floor(x));
  int y0 = static_cast<int>(std::floor(y));
  if (x0 == img.width - 1) --x0;
  if (y0 == img.height - 1) --y0;
  if (img.width == 1) x0 = 0;
  if (img.height == 1) y0 = 0;
  const double fx = x - x0;
  const double fy = y - y0;
  const int x1 = img.width == 1 ? x0 : x0 + 1;
  const int y1 = img.height == 1 ? y0 : y0 + 1;
  const double v = (1.0 - fy) * ((1.0 - fx) * img.at(y0, x0) + fx * img.at(y0, x1)) +
                   fy * ((1.0 - fx) * img.at(y1, x0) + fx * img.at(y1, x1));
  out = static_cast<float>(v);
  return true;
}

inline bool bilinear_rgb(const ImageRgb& img, double x, double y, float out[3]) {
  if (!(x >= 0.0 && x <= img.width - 1 && y >= 0.0 && y <= img.height - 1)) return false;
  int x0 = static_cast<int>(std::floor(x));
  int y0 = static_cast<int>(std::floor(y));
  if (x0 == img.width - 1 && img.width > 1) --x0;
  if (y0 == img.height - 1 && img.height > 1) --y0;
  const double fx = x - x0;
  const double fy = y - y0;
  const int x1 = img.width == 1 ? x0 : x0 + 1;
  const int y1 = img.height == 1 ? y0 : y0 + 1;
  const float* p00 = img.px(y0, x0);
  const float* p01 = img.px(y0, x1);
  const float* p10 = img.px(y1, x0);
  const float* p11 = img.px(y1, x1);
  for (int c = 0; c < 3; ++c) {
    const double v = (1.0 - fy) * ((1.0 - fx) * p00[c] + fx * p01[c]) +
                     fy * ((1.0 - fx) * p10[c] + fx * p11[c]);
    out[c] = static_cast<float>(v);
  }
  return true;
}

}  // namespace pmcl
