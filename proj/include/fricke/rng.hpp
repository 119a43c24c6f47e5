#pragma once

#include <cstdint>
#include <random>

#include "fricke/mat2.hpp"
#include "fricke/words.hpp"

namespace fricke {

/// splitmix64 finalizer; derives independent stream seeds from (seed, index).
std::uint64_t mix64(std::uint64_t x);

/// Deterministic uniform sampling. mt19937_64's raw output is fixed by the
/// standard and the [0,1) mapping below is explicit, so sequences reproduce
/// bit-for-bit across platforms (golden files rely on this).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    return Rng(mix64(seed + 0x9e3779b97f4a7c15ULL * (trial + 1)));
  }

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1), 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

  /// Re and Im independently uniform in [-1, 1).
  Complex box() {
    double re = symmetric();
    double im = symmetric();
    return {re, im};
  }

  /// Uniform in {0, ..., n-1}.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

/// Draws a, b, c with components uniform in [-1,1] (a resampled while
/// |a| < 1e-3) and sets d = (1 + b*c)/a, so det = 1 up to roundoff.
Mat2 random_sl2(Rng& rng);

/// Random reduced word: length uniform in [0, max_length], each symbol
/// uniform among those not cancelling the previous one.
Word random_word(Rng& rng, int rank, std::size_t max_length);

}  // namespace fricke
