#pragma once

#include <cstdint>
#include <random>

namespace simstring {

// Seeded source of uniform draws. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the real/integer mappings below are ours so
// that draws do not depend on the standard library's distribution classes.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  // Independent source for sub-stream `stream` of `seed`:
  // engine seed = splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15)).
  static RandomSource forStream(std::uint64_t seed, std::uint64_t stream);

  // Uniform real in [0, 1) with 53 bits of resolution.
  double real();

  // Uniform integer on the inclusive range [lo, hi]; requires lo <= hi.
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace simstring
