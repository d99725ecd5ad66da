#ifndef MOTIFCLUST_RNG_HPP
#define MOTIFCLUST_RNG_HPP

#include <cstdint>
#include <random>

namespace motifclust {

// All randomness in the artifact flows through this generator: mt19937_64
// seeded from a 64-bit seed. Uniform doubles are produced from the top 53
// bits so draws do not depend on library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1).
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound);

  bool bernoulli(double p) { return next_double() < p; }

  // Derives an independent stream for a sub-task (per-trial, per-seed).
  static Rng substream(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
};

}  // namespace motifclust

#endif
