#pragma once

#include <cstdint>
#include <random>

namespace cvawwr::num {

// Reproducible stream of standard normal draws. Generator family: mt19937_64,
// one engine per (seed, stream_id) with SplitMix64 seed separation; normals by
// Box-Muller on 53-bit uniforms, so the sequence is identical across platforms
// and build modes. Each stream is confined to one worker.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream_id)
      : gen_(mix(seed, stream_id)) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // One Box-Muller pair; used by the path kernel that needs two normals per step.
  void next_pair(double& z1, double& z2) {
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    z1 = r * std::cos(a);
    z2 = r * std::sin(a);
  }

 private:
  static std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix(s);
    s ^= stream_id * 0xD2B74407B1CE6E93ull + 0x9E3779B97F4A7C15ull;
    return a ^ splitmix(s);
  }

  double uniform_open() {
    // (0, 1]; never 0 so log() is safe.
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace cvawwr::num
