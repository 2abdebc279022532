#include "charlab/rng.hpp"

namespace charlab {

namespace {

// SplitMix64 finaliser; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// For a fixed master seed, distinct stream indices give distinct engine
// seeds: index ↦ key is injective (odd multiplier) and mix64 is bijective.
std::uint64_t engine_seed(RngStream s) {
  return mix64(mix64(s.master_seed) + s.stream_index * 0x9e3779b97f4a7c15ULL);
}

}  // namespace

UniformSource::UniformSource(RngStream stream) : engine_(engine_seed(stream)) {}

}  // namespace charlab
