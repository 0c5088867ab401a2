#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nwt {

enum class WeightDistribution { uniform, zipf, constant };

namespace detail {

// Fixed-sequence 64-bit generator (splitmix64). Instance generation must be
// bit-identical across runs and platforms, so no standard-library
// distributions are used anywhere downstream.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Zipf(s = 1) rank over [1, size]: P(k) proportional to 1/k.
// Prefix sums of the harmonic series are exact enough in double and involve
// no transcendental calls, so draws are reproducible.
class ZipfSampler {
 public:
  explicit ZipfSampler(std::uint64_t size) {
    if (size == 0 || size > (1u << 20))
      throw std::invalid_argument("zipf: range size must be in [1, 2^20]");
    prefix_.reserve(size);
    double h = 0.0;
    for (std::uint64_t k = 1; k <= size; ++k) {
      h += 1.0 / static_cast<double>(k);
      prefix_.push_back(h);
    }
  }

  // 0-based rank; rank 0 is the most frequent.
  std::uint64_t draw(SplitMix64& rng) const {
    const double u = rng.unit() * prefix_.back();
    std::size_t lo = 0, hi = prefix_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (prefix_[mid] > u)
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }

 private:
  std::vector<double> prefix_;
};

}  // namespace detail
}  // namespace nwt
