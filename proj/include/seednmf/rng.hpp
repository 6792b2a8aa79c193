#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace seednmf {

// splitmix64 finalizer, used to derive independent sub-stream seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t base, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the stream name
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix_seed(base ^ h);
}

/// Deterministic random source built on mt19937_64. The standard library's
/// distribution objects are implementation-defined, so uniform, index and
/// normal draws are produced here directly; two runs with the same seed give
/// the same sequence regardless of the standard library in use.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), exactly uniform via rejection. n >= 1.
  std::size_t uniform_index(std::size_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = next_u64() & mask;
      if (v < n) return static_cast<std::size_t>(v);
    }
  }

  /// Zero-mean Gaussian with the given standard deviation (Box-Muller,
  /// one spare kept between calls).
  double normal(double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_ * sigma;
    }
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;          // [0,1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a) * sigma;
  }

  /// Independent generator derived from this one's seed and a stream name.
  SplitRng substream(std::string_view name) const {
    return SplitRng(substream_seed(seed_, name));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace seednmf
