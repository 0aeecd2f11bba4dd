#ifndef GSTLAB_RNG_HPP
#define GSTLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace gstlab {

// splitmix64 step; used both as a mixer for seed derivation and to expand
// a master seed into independent per-trial streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic seed for a (cell, trial) slot of an experiment grid.
// Pure function of its arguments, independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = master;
  splitmix64(s);
  s ^= 0x243F6A8885A308D3ULL + a;
  splitmix64(s);
  s ^= 0x13198A2E03707344ULL + b;
  splitmix64(s);
  s ^= 0xA4093822299F31D0ULL + c;
  return splitmix64(s);
}

// Uniform double in [0, 1) from the top 53 bits of one generator draw.
// std::uniform_real_distribution is not bit-portable across standard
// libraries; this mapping is.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform_range(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(gen);
}

// Uniform integer in [lo, hi] by rejection-free scaling (fine for survey
// ranges; not used where exact equidistribution over huge ranges matters).
inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {
  return lo + static_cast<int>(uniform_unit(gen) * (hi - lo + 1));
}

}  // namespace gstlab

#endif
