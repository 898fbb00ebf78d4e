#ifndef FXAGG_SAMPLING_HPP
#define FXAGG_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace fxagg {

// SplitMix64 finalizer; used to derive independent sub-seeds so that each
// axiom check consumes its own stream regardless of evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

// Deterministic sample source. Doubles are produced by the fixed
// 53-bit-mantissa construction rather than std::uniform_real_distribution,
// so identical seeds give identical streams on every platform.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_u64() { return rng_(); }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Log-uniform over [lo, hi], 0 < lo <= hi.
  double log_uniform(double lo, double hi);

  // Unbiased integer in [0, n) by rejection.
  std::size_t below(std::size_t n);

  // Fisher-Yates shuffle of the identity.
  std::vector<std::size_t> permutation(std::size_t n);

  // n positive rates, log-uniform over [lo, hi].
  std::vector<double> rates(std::size_t n, double lo, double hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace fxagg

#endif  // FXAGG_SAMPLING_HPP
