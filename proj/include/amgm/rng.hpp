#pragma once

#include <cmath>
#include <cstdint>

namespace amgm {

// Finalizer from Vigna's splitmix64 (public domain). Bijective on 64-bit
// words, so distinct inputs always yield distinct outputs.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// splitmix64: a tiny, fast generator with period 2^64. Statistical quality
// is more than enough for Monte Carlo on the sphere, and the fixed stepping
// makes replay trivial.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Independent substream for one trial. The state orbit of splitmix64 is a
// single Weyl sequence, so seeding trial k at seed + k*increment would make
// neighbouring trials walk the same orbit a few steps apart. Hashing both
// the seed and the index scatters the start points across the whole orbit.
inline constexpr SplitMix64 substream(std::uint64_t seed,
                                      std::uint64_t index) noexcept {
  const std::uint64_t h = mix64(seed ^ 0x9E3779B97F4A7C15ull);
  return SplitMix64(mix64(h + index * 0xD1B54A32D192ED03ull));
}

// Standard normals via the Marsaglia polar method. Two variates per
// accepted point; the spare is cached. Fully deterministic for a given
// underlying stream, no trig calls.
class NormalStream {
 public:
  explicit NormalStream(SplitMix64 rng) noexcept : rng_(rng) {}

  double next() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * rng_.next_unit() - 1.0;
      v = 2.0 * rng_.next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

 private:
  SplitMix64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace amgm
