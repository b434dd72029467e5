#pragma once

#include <cstdint>
#include <random>

namespace fprlab {

/// SplitMix64 finaliser, used to derive independent seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed of substream `stream` derived from a master seed. Every random
/// consumer in the library takes its generator from here, so a single
/// master seed fixes all randomness in a run.
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ull));
}

/// Named substreams.
enum class Stream : std::uint64_t {
  kChain = 1,
  kMonteCarlo = 2,
  kGenerators = 3,
  kTuples = 4,
};

inline std::mt19937_64 make_rng(std::uint64_t master, Stream stream, std::uint64_t index = 0) {
  return std::mt19937_64(substream_seed(substream_seed(master, static_cast<std::uint64_t>(stream)), index));
}

/// Uniform integer in [0, bound) without modulo bias. Implemented here
/// rather than with std::uniform_int_distribution so that sequences are
/// identical across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace fprlab
