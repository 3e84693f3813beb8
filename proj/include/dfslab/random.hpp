#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace dfslab {

// Seeded randomness handle. Draws are derived from raw mt19937_64 output
// (pinned by the standard) instead of <random> distribution objects, so a
// given seed replays bit-identically across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for worker `stream` of a run seeded with `seed`.
  static RandomSource forked(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return RandomSource(z ^ (z >> 31));
  }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on {0, ..., n-1}.
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int requires n > 0");
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
  }

  // Knuth's product-of-uniforms sampler; fine for the small means used here.
  int poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
      throw std::invalid_argument("poisson mean must be finite and >= 0");
    if (mean == 0.0) return 0;
    const double limit = std::exp(-mean);
    int count = 0;
    double product = 1.0;
    do {
      ++count;
      product *= uniform();
    } while (product > limit);
    return count - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dfslab
