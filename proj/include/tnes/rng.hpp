#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace tnes {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Folds the parts through mix64 one at a time; used to derive an independent
// stream seed from (base seed, case, n, replicate) and similar tuples.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t p : parts) h = mix64(h ^ mix64(p));
  return h;
}

using Engine = std::mt19937_64;

// Uniform on the open interval (0, 1) from the top 53 bits of one draw.
inline double uniform_open(Engine& eng) {
  const std::uint64_t bits = eng() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

// Uniform integer in [0, bound), bound > 0, by rejection (no modulo bias).
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = eng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace tnes
