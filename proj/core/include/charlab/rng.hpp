#pragma once

#include <cstdint>
#include <random>

namespace charlab {

/// Identifies one reproducible substream: draw k of a batch run with master
/// seed s always uses RngStream{s, k}, whatever the worker layout.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

/// Uniform variates for one substream: mt19937_64 seeded with a
/// SplitMix64 hash of (master_seed, stream_index).
class UniformSource {
public:
  explicit UniformSource(RngStream stream);

  // Uniform on [0,1) with 53 random bits; platform independent.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

}  // namespace charlab
