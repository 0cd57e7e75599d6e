#pragma once

#include <cstdint>

namespace qquad {

/// 64-bit linear congruential generator used for all sampled suites, so that
/// reports reproduce bit-for-bit across runs and implementations.
///
///   state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
///   output = state >> 32
///   below(n) = output % n
class Lcg64 {
 public:
  explicit Lcg64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 32;
  }

  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t state_;
};

}  // namespace qquad
