#pragma once

#include <cmath>
#include <stdexcept>

namespace pmcl {

/// Pinhole model of a plenoptic camera decoded into an S x T grid of
/// sub-aperture views. View indices are 1-based; the center view sits at the
/// middle index. Image coordinates follow the integer pixel lattice: pixel
/// (row i, column j) samples the continuous point (x=j, y=i).
struct PlenopticCamera {
  int grid_s = 9;          // horizontal sub-aperture count S
  int grid_t = 9;          // vertical sub-aperture count T
  int center_s = 5;        // 1-based center view index s_c
  int center_t = 5;        // 1-based center view index t_c
  double baseline = 6e-4;  // meters between adjacent sub-apertures
  double focal_px = 400.0; // focal length in pixels
  int height = 328;
  int width = 328;
  double cx = -1.0;        // principal point; negative means image center
  double cy = -1.0;

  double principal_x() const { return cx >= 0.0 ? cx : 0.5 * (width - 1); }
  double principal_y() const { return cy >= 0.0 ? cy : 0.5 * (height - 1); }

  void validate() const {
    if (grid_s < 3 || grid_t < 3 || grid_s % 2 == 0 || grid_t % 2 == 0)
      throw std::invalid_argument("sub-aperture grid must be odd and at least 3x3");
    if (center_s != (grid_s + 1) / 2 || center_t != (grid_t + 1) / 2)
      throw std::invalid_argument("center view must be the middle grid index");
    if (!(baseline > 0.0)) throw std::invalid_argument("baseline must be positive");
    if (!(focal_px > 0.0)) throw std::invalid_argument("focal length must be positive");
    if (height < 1 || width < 1) throw std::invalid_argument("resolution must be positive");
  }

  /// Disparity in pixels per unit view offset for a point at depth d.
  double depth_to_disparity(double d) const {
    if (!(d > 0.0)) throw std::domain_error("depth must be positive");
    return baseline * focal_px / d;
  }

  /// Depth whose disparity equals D pixels per unit view offset.
  double disparity_to_depth(double disparity) const {
    if (!(disparity > 0.0)) throw std::domain_error("disparity must be positive");
    return baseline * focal_px / disparity;
  }

  bool is_edge_view(int s, int t) const {
    return s == 1 || s == grid_s || t == 1 || t == grid_t;
  }

  bool is_center_view(int s, int t) const { return s == center_s && t == center_t; }
};

inline double depth_to_disparity(const PlenopticCamera& camera, double d) {
  return camera.depth_to_disparity(d);
}

}  // namespace pmcl
