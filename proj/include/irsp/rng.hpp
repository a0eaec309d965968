#pragma once

#include <cstdint>

namespace irsp {

// splitmix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of realization r under a master seed. Depends only on (master, r),
// never on scheduling.
constexpr std::uint64_t realization_seed(std::uint64_t master, std::uint64_t r) {
  return splitmix64(splitmix64(master) ^ splitmix64(r + 0x632be59bd9b4e019ULL));
}

}  // namespace irsp
