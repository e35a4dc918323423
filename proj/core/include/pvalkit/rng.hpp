#ifndef PVALKIT_RNG_HPP
#define PVALKIT_RNG_HPP

#include <cstdint>

#include "pvalkit/dist.hpp"

namespace pvalkit {

// SplitMix64: a Weyl-sequence counter passed through an avalanche finalizer
// (Steele, Lea & Flood's SplittableRandom update function). Each output is a
// pure function of (seed, stream, counter), so per-replicate substreams can
// be constructed in O(1) and evaluated in any order — simulation results do
// not depend on how replicates are scheduled across threads.
//
// Normal deviates use the inverse-CDF method via dist::norm_quantile.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(derive_stream(seed, stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  // Uniform on the open interval (0, 1), 53-bit resolution, never exactly
  // 0 or 1 (safe to feed straight into norm_quantile).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_normal() { return dist::norm_quantile(next_unit()); }

  double next_normal(double mu, double sigma) {
    return mu + sigma * next_normal();
  }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    // two finalizer rounds decorrelate (seed, stream) pairs
    return finalize(finalize(seed + 0x9E3779B97F4A7C15ULL) ^
                    finalize(stream + 0xD1B54A32D192ED03ULL));
  }

  std::uint64_t state_;
};

}  // namespace pvalkit

#endif  // PVALKIT_RNG_HPP
