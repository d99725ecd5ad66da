#include "motifclust/rng.hpp"

namespace motifclust {

std::uint64_t Rng::next_below(std::uint64_t bound) {
  // rejection sampling over the largest multiple of bound
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return v % bound;
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 mix of (seed, stream) to decorrelate streams
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return Rng(z);
}

}  // namespace motifclust
