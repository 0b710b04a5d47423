#ifndef HEUNTERM_RANDOM_HPP_
#define HEUNTERM_RANDOM_HPP_

#include <cstdint>

#include "heunterm/core.hpp"

namespace heunterm {

/// Tiny deterministic generator (splitmix64). Used instead of <random>
/// distributions so that sampled parameter sets and reports are bit-identical
/// across platforms, standard libraries and thread counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform complex in the box [re_lo, re_hi) x [im_lo, im_hi).
  Complex uniform_box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    const double im = uniform(im_lo, im_hi);
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

/// Stable per-trial seed: mixes the base seed with the order and trial index
/// so parallel schedules cannot change what any trial sees.
inline std::uint64_t trial_seed(std::uint64_t base_seed, int order, int trial) {
  SplitMix64 mix(base_seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(order + 1)) ^
                 (0xC2B2AE3D27D4EB4FULL * static_cast<std::uint64_t>(trial + 1)));
  return mix.next();
}

}  // namespace heunterm

#endif  // HEUNTERM_RANDOM_HPP_
