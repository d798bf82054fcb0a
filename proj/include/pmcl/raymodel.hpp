#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pmcl {

/// Density of N(mean, variance) evaluated at x.
inline double normal_pdf(double x, double mean, double variance) {
  const double d = x - mean;
  return std::exp(-0.5 * d * d / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

/// One Gaussian component of a light ray: a surface point contributing a
/// per-channel Gaussian color with mixing weight `weight`.
struct GaussianComponent {
  double weight = 1.0;
  std::vector<double> mean;      // one entry per color channel
  std::vector<double> variance;  // per channel, strictly positive
};

/// A ray observed at a pixel: a weighted sum of the Gaussian colors of every
/// surface the ray passes through. Weights form a convex combination and all
/// components share the same per-channel variance.
struct GaussianMixtureRay {
  std::vector<GaussianComponent> components;

  int channel_count() const {
    return components.empty() ? 0 : static_cast<int>(components.front().mean.size());
  }

  void validate() const {
    if (components.empty()) throw std::invalid_argument("ray has no components");
    const std::size_t channels = components.front().mean.size();
    if (channels == 0) throw std::invalid_argument("ray has no color channels");
    double weight_sum = 0.0;
    for (const auto& comp : components) {
      if (!(comp.weight >= 0.0 && comp.weight <= 1.0))
        throw std::invalid_argument("component weight outside [0, 1]");
      if (comp.mean.size() != channels || comp.variance.size() != channels)
        throw std::invalid_argument("inconsistent channel counts within ray");
      for (std::size_t c = 0; c < channels; ++c) {
        if (!(comp.variance[c] > 0.0)) throw std::invalid_argument("variance must be positive");
        if (comp.variance[c] != components.front().variance[c])
          throw std::invalid_argument("components must share per-channel variance");
      }
      weight_sum += comp.weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
      throw std::invalid_argument("component weights must sum to 1");
  }

  /// Mixture density at color value lambda in channel c.
  double density(double lambda, int c) const {
    double v = 0.0;
    for (const auto& comp : components)
      v += comp.weight * normal_pdf(lambda, comp.mean[c], comp.variance[c]);
    return v;
  }
};

/// Closed-form squared L2 distance between the color densities of two rays,
/// summed over channels. Expands (sum_i a_i N_i - sum_j b_j N_j)^2 with the
/// Gaussian product identity: the integral of N(mu, v) * N(mu', v') over the
/// color axis equals the density of N(mu', v + v') at mu.
inline double gm_l2_distance(const GaussianMixtureRay& a, const GaussianMixtureRay& b) {
  a.validate();
  b.validate();
  if (a.channel_count() != b.channel_count())
    throw std::invalid_argument("rays have different channel counts");
  const int channels = a.channel_count();
  for (int c = 0; c < channels; ++c) {
    if (a.components.front().variance[c] != b.components.front().variance[c])
      throw std::invalid_argument("rays must share per-channel variance");
  }

  double total = 0.0;
  for (int c = 0; c < channels; ++c) {
    const double v2 = 2.0 * a.components.front().variance[c];
    double aa = 0.0, bb = 0.0, ab = 0.0;
    for (const auto& ca : a.components)
      for (const auto& cb : a.components) aa += ca.weight * cb.weight * normal_pdf(ca.mean[c], cb.mean[c], v2);
    for (const auto& ca : b.components)
      for (const auto& cb : b.components) bb += ca.weight * cb.weight * normal_pdf(ca.mean[c], cb.mean[c], v2);
    for (const auto& ca : a.components)
      for (const auto& cb : b.components) ab += ca.weight * cb.weight * normal_pdf(ca.mean[c], cb.mean[c], v2);
    total += aa + bb - 2.0 * ab;
  }
  return std::max(total, 0.0);
}

struct QuadratureOptions {
  double step = 1e-4;       // composite trapezoid step along the color axis
  double pad_sigmas = 5.0;  // integration range extends this many sigmas past the means
};

/// Numerical-quadrature route for the same squared distance. Integrates
/// (rho_a - rho_b)^2 per channel with the composite trapezoid rule over
/// [min mean - pad * sigma_max, max mean + pad * sigma_max].
inline double gm_l2_distance_quadrature(const GaussianMixtureRay& a, const GaussianMixtureRay& b,
                                        const QuadratureOptions& opts = {}) {
  a.validate();
  b.validate();
  if (a.channel_count() != b.channel_count())
    throw std::invalid_argument("rays have different channel counts");
  const int channels = a.channel_count();

  double total = 0.0;
  for (int c = 0; c < channels; ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sigma_max = 0.0;
    for (const auto* ray : {&a, &b}) {
      for (const auto& comp : ray->components) {
        lo = std::min(lo, comp.mean[c]);
        hi = std::max(hi, comp.mean[c]);
        sigma_max = std::max(sigma_max, std::sqrt(comp.variance[c]));
      }
    }
    lo -= opts.pad_sigmas * sigma_max;
    hi += opts.pad_sigmas * sigma_max;
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / opts.step));
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double lambda = lo + h * static_cast<double>(k);
      const double d = a.density(lambda, c) - b.density(lambda, c);
      const double f = d * d;
      sum += (k == 0 || k == n) ? 0.5 * f : f;
    }
    total += sum * h;
  }
  return total;
}

/// Canonical two-surface configuration: a translucent front surface passing
/// fraction `alpha` of the light, an opaque surface behind it, color offset
/// `delta` between neighboring points of the same surface, shared channel
/// standard deviation `sigma`.
struct TwoLayerScenario {
  double alpha = 0.3;
  double delta = 0.1;
  double sigma = 0.1;

  void validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha outside [0, 1]");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  }
};

/// Squared distances between the observed ray and the stereo-matched ray at
/// each candidate depth (the common constant factor 2 is dropped).
struct TwoLayerDistances {
  double at_translucent_depth = 0.0;  // match aligned on the front surface
  double at_opaque_depth = 0.0;       // match aligned on the back surface
  double at_invalid_depth = 0.0;      // match aligned on neither
};

inline TwoLayerDistances two_layer_distances(const TwoLayerScenario& s) {
  s.validate();
  const double amplitude = 1.0 / std::sqrt(4.0 * std::numbers::pi * s.sigma * s.sigma);
  const double k = amplitude * (1.0 - std::exp(-s.delta * s.delta / (4.0 * s.sigma * s.sigma)));
  TwoLayerDistances d;
  d.at_translucent_depth = (1.0 - s.alpha) * (1.0 - s.alpha) * k;
  d.at_opaque_depth = s.alpha * s.alpha * k;
  d.at_invalid_depth = d.at_translucent_depth + d.at_opaque_depth;
  return d;
}

/// Depth likelihoods of the two-layer configuration in closed form.
struct TwoLayerLikelihoods {
  double at_opaque_depth = 0.0;
  double at_translucent_depth = 0.0;
  double at_invalid_depth = 0.0;
};

inline TwoLayerLikelihoods analytic_two_layer_dlv(const TwoLayerScenario& s) {
  s.validate();
  const double front = (1.0 - s.alpha) * (1.0 - s.alpha);
  const double back = s.alpha * s.alpha;
  TwoLayerLikelihoods l;
  l.at_opaque_depth = front / (front + back);
  l.at_translucent_depth = back / (front + back);
  l.at_invalid_depth = 0.0;
  return l;
}

/// Max-minus-distance normalization mapping candidate-depth distances to
/// likelihoods that sum to 1 (all-equal distances carry no evidence and map
/// to zeros).
inline std::vector<double> likelihoods_from_distances(const std::vector<double>& distances) {
  if (distances.empty()) throw std::invalid_argument("no distances");
  const double max_d = *std::max_element(distances.begin(), distances.end());
  std::vector<double> scores(distances.size());
  double denom = 0.0;
  for (std::size_t k = 0; k < distances.size(); ++k) {
    scores[k] = max_d - distances[k];
    denom += scores[k];
  }
  if (denom <= 0.0) return std::vector<double>(distances.size(), 0.0);
  for (double& v : scores) v /= denom;
  return scores;
}

/// The four ray configurations of the two-layer scene, built as explicit
/// single-channel mixtures: the observed ray and the rays a stereo view pairs
/// with it at the translucent, opaque, and invalid candidate depths.
/// `translucent_base` / `opaque_base` set the two surfaces' base colors.
struct TwoLayerRays {
  GaussianMixtureRay observed;
  GaussianMixtureRay match_translucent;
  GaussianMixtureRay match_opaque;
  GaussianMixtureRay match_invalid;
};

inline TwoLayerRays make_two_layer_rays(const TwoLayerScenario& s, double translucent_base = 0.0,
                                        double opaque_base = 1.0) {
  s.validate();
  const double var = s.sigma * s.sigma;
  auto mix = [&](double front_mean, double back_mean) {
    GaussianMixtureRay ray;
    ray.components.push_back({s.alpha, {front_mean}, {var}});
    ray.components.push_back({1.0 - s.alpha, {back_mean}, {var}});
    return ray;
  };
  TwoLayerRays rays;
  rays.observed = mix(translucent_base, opaque_base);
  rays.match_translucent = mix(translucent_base, opaque_base + s.delta);
  rays.match_opaque = mix(translucent_base + s.delta, opaque_base);
  rays.match_invalid = mix(translucent_base + s.delta, opaque_base + s.delta);
  return rays;
}

}  // namespace pmcl
