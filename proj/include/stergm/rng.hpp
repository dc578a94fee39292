#pragma once

#include <cstdint>

namespace stergm {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Stafford mix13 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

// Derives an independent sub-seed from a base seed and a salt (config index,
// batch number, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return detail::mix64(seed + detail::kGolden * (salt + 1));
}

// Splittable counter-style generator. Every (seed, replicate, step, phase)
// tuple names its own stream, so replicates simulated on different threads
// still draw bit-identical sequences.
class CounterRng {
 public:
  CounterRng() : CounterRng(0, 0, 0, 0) {}

  CounterRng(std::uint64_t seed, std::uint64_t replicate, std::uint64_t step,
             std::uint64_t phase) {
    std::uint64_t h = seed + detail::kGolden;
    h = detail::mix64(h ^ (replicate + 0xd1b54a32d192ed03ULL));
    h = detail::mix64(h ^ (step + 0x8cb92ba72f3d8dd7ULL));
    h = detail::mix64(h ^ (phase + 0x2545f4914f6cdd1dULL));
    state_ = h;
  }

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  // Unbiased integer in [0, bound) via Lemire's multiply-shift rejection.
  std::uint32_t next_below(std::uint32_t bound) {
    std::uint64_t x = next_u64() & 0xffffffffULL;
    std::uint64_t m = x * bound;
    std::uint32_t low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = (-bound) % bound;
      while (low < threshold) {
        x = next_u64() & 0xffffffffULL;
        m = x * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

 private:
  std::uint64_t state_ = 0;
};

}  // namespace stergm
