#pragma once

#include <cstdint>
#include <random>

namespace pmcl {

/// splitmix64 finalizer; used to spread seed material before it feeds an engine.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives the seed of an independent substream from a base seed and up to
/// three stream coordinates (purpose id, view index, iteration, ...).
/// Substreams make per-view / per-iteration draws independent of the order
/// in which other streams are consumed.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

// Stream purpose ids.
inline constexpr std::uint64_t kStreamRender = 0x72656e64;   // per-view image noise
inline constexpr std::uint64_t kStreamInit = 0x696e6974;     // particle initialization
inline constexpr std::uint64_t kStreamResample = 0x72736d70; // resampling offsets
inline constexpr std::uint64_t kStreamPerturb = 0x70727462;  // particle perturbation
inline constexpr std::uint64_t kStreamTexture = 0x74657874;  // procedural textures

/// Deterministic random stream. Distribution objects are constructed per call
/// so a stream's output depends only on the sequence of calls made on it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  std::uint64_t next_u64() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pmcl
