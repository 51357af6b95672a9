#pragma once

// Portable random streams. Replicate r of an experiment seeded with `master` draws
// from xoshiro256++ initialised through SplitMix64 from split_seed(master, r).
// Normals use the Marsaglia polar method, so streams do not depend on the
// standard library's distribution implementations.

#include <cmath>
#include <cstdint>
#include <limits>

namespace svmasym::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of stream `stream` derived from `master`.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master;
  const std::uint64_t a = splitmix64(s);
  std::uint64_t t = stream ^ 0xD1B54A32D192ED03ULL;
  const std::uint64_t b = splitmix64(t);
  std::uint64_t mixed = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
  return splitmix64(mixed);
}

class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

class NormalSampler {
 public:
  double operator()(Xoshiro256pp& gen) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * gen.uniform() - 1.0;
      v = 2.0 * gen.uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

 private:
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace svmasym::rng
