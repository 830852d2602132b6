#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace spikeclust {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Engine for one task, derived from (seed, stream path). Parallel work keyed
// by task index, e.g. make_rng(seed, {tree}), draws the same values no matter
// which thread runs it.
inline std::mt19937_64 make_rng(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> stream = {}) {
  std::uint64_t h = splitmix64(seed ^ 0x8f1b'cafe'5eed'0001ULL);
  for (std::uint64_t s : stream) {
    h = splitmix64(h ^ s);
  }
  return std::mt19937_64(h);
}

}  // namespace spikeclust
