#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "pmcl/rng.hpp"

namespace pmcl {

/// Procedural color field evaluated at 3D points in the camera frame.
/// Deterministic given its parameters; no image assets involved.
class Texture {
 public:
  enum class Kind { kConstant, kChecker, kNoise };

  static Texture constant(const std::array<double, 3>& color) {
    Texture t;
    t.kind_ = Kind::kConstant;
    t.color_a_ = color;
    return t;
  }

  /// Checker over the (x, y) axes with cell size `scale` meters. `softness`
  /// is the half-width in meters of the linear transition at cell borders;
  /// zero gives hard edges.
  static Texture checker(const std::array<double, 3>& color_a, const std::array<double, 3>& color_b,
                         double scale, double softness = 0.0) {
    if (!(scale > 0.0)) throw std::invalid_argument("checker scale must be positive");
    if (softness < 0.0) throw std::invalid_argument("checker softness must be nonnegative");
    Texture t;
    t.kind_ = Kind::kChecker;
    t.color_a_ = color_a;
    t.color_b_ = color_b;
    t.scale_ = scale;
    t.softness_ = softness;
    return t;
  }

  /// Smooth 3D value noise with lattice cell size `scale` meters, channel
  /// values interpolating between color_a and color_b.
  static Texture noise(const std::array<double, 3>& color_a, const std::array<double, 3>& color_b,
                       double scale, std::uint64_t seed) {
    if (!(scale > 0.0)) throw std::invalid_argument("noise scale must be positive");
    Texture t;
    t.kind_ = Kind::kNoise;
    t.color_a_ = color_a;
    t.color_b_ = color_b;
    t.scale_ = scale;
    t.seed_ = seed;
    return t;
  }

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  double softness() const { return softness_; }
  std::uint64_t seed() const { return seed_; }
  const std::array<double, 3>& color_a() const { return color_a_; }
  const std::array<double, 3>& color_b() const { return color_b_; }

  std::array<double, 3> sample(const Eigen::Vector3d& p) const {
    switch (kind_) {
      case Kind::kConstant:
        return color_a_;
      case Kind::kChecker: {
        const double v = square_wave(p.x()) * square_wave(p.y());
        return lerp(0.5 * (v + 1.0));
      }
      case Kind::kNoise: {
        std::array<double, 3> out;
        for (int c = 0; c < 3; ++c) {
          const double n = value_noise(p / scale_, static_cast<std::uint64_t>(c));
          out[c] = color_a_[c] + (color_b_[c] - color_a_[c]) * n;
        }
        return out;
      }
    }
    return color_a_;
  }

 private:
  Kind kind_ = Kind::kConstant;
  std::array<double, 3> color_a_{0.5, 0.5, 0.5};
  std::array<double, 3> color_b_{0.5, 0.5, 0.5};
  double scale_ = 0.02;
  double softness_ = 0.0;
  std::uint64_t seed_ = 0;

  std::array<double, 3> lerp(double t) const {
    return {color_a_[0] + (color_b_[0] - color_a_[0]) * t,
            color_a_[1] + (color_b_[1] - color_a_[1]) * t,
            color_a_[2] + (color_b_[2] - color_a_[2]) * t};
  }

  /// +-1 square wave of period 2*scale with linear transitions of half-width
  /// `softness` around the zero crossings.
  double square_wave(double x) const {
    const double s = std::sin(std::numbers::pi * x / scale_);
    if (softness_ <= 0.0) return s >= 0.0 ? 1.0 : -1.0;
    const double slope = scale_ / (std::numbers::pi * softness_);
    return std::clamp(s * slope, -1.0, 1.0);
  }

  static double lattice_value(std::int64_t x, std::int64_t y, std::int64_t z, std::uint64_t seed,
                              std::uint64_t channel) {
    std::uint64_t h = substream_seed(seed ^ kStreamTexture, static_cast<std::uint64_t>(x),
                                     static_cast<std::uint64_t>(y), static_cast<std::uint64_t>(z));
    h = mix64(h ^ channel);
    return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);  // [0, 1)
  }

  double value_noise(const Eigen::Vector3d& q, std::uint64_t channel) const {
    const std::int64_t x0 = static_cast<std::int64_t>(std::floor(q.x()));
    const std::int64_t y0 = static_cast<std::int64_t>(std::floor(q.y()));
    const std::int64_t z0 = static_cast<std::int64_t>(std::floor(q.z()));
    auto smooth = [](double t) { return t * t * (3.0 - 2.0 * t); };
    const double fx = smooth(q.x() - static_cast<double>(x0));
    const double fy = smooth(q.y() - static_cast<double>(y0));
    const double fz = smooth(q.z() - static_cast<double>(z0));
    double v = 0.0;
    for (int dz = 0; dz <= 1; ++dz) {
      for (int dy = 0; dy <= 1; ++dy) {
        for (int dx = 0; dx <= 1; ++dx) {
          const double w = (dx ? fx : 1.0 - fx) * (dy ? fy : 1.0 - fy) * (dz ? fz : 1.0 - fz);
          v += w * lattice_value(x0 + dx, y0 + dy, z0 + dz, seed_, channel);
        }
      }
    }
    return v;
  }
};

}  // namespace pmcl
