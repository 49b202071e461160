#pragma once

#include <cstdint>
#include <random>

namespace jifdr::rng {

// splitmix64; used to derive independent, reproducible seed streams so that
// channels and arrivals for a given (seed, frame) are identical across schemes.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix(mix(a, b), c);
}

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

// Named sub-streams of the master seed.
enum class Stream : std::uint64_t {
  arrivals = 0x41525256,      // per (seed, frame)
  channel = 0x4348414e,       // per (seed, frame, numerology)
  topology = 0x544f504f,      // user placement
  training = 0x5452414e,      // predictor training trace + shuffling
};

inline std::uint64_t stream_seed(std::uint64_t master, Stream s, std::uint64_t a = 0,
                                 std::uint64_t b = 0) {
  return mix(mix(master, static_cast<std::uint64_t>(s)), mix(a, b));
}

}  // namespace jifdr::rng
