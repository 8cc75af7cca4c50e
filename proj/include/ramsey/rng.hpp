#pragma once

#include <cstdint>

#include "ramsey/rational.hpp"

namespace ramsey {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_chain(std::uint64_t h, std::uint64_t v) { return mix64(h ^ mix64(v)); }

// Stream key for one sampling pass. The probability is deliberately not part
// of the key: a (seed, n, trial) triple pins the per-edge uniforms, so raising
// p can only add edges to the sampled graph.
inline std::uint64_t gnp_stream(std::uint64_t seed, int n, int trial) {
  return mix_chain(mix_chain(seed, static_cast<std::uint64_t>(n)),
                   static_cast<std::uint64_t>(trial));
}

// 53-bit uniform for one edge, addressable by index alone.
inline std::uint64_t edge_u53(std::uint64_t stream, int edge_index) {
  return mix_chain(stream, static_cast<std::uint64_t>(edge_index)) >> 11;
}

constexpr std::uint64_t u53_one = std::uint64_t{1} << 53;

// Inclusion threshold: an edge with uniform u is present iff u < threshold.
// p is rounded to the nearest multiple of 2^-53, ties up.
inline std::uint64_t dyadic_threshold(const Rational& p) {
  if (p.num() <= 0) return 0;
  if (p.num() >= p.den()) return u53_one;
  const unsigned __int128 t =
      ((static_cast<unsigned __int128>(p.num()) << 54) + static_cast<unsigned __int128>(p.den())) /
      (static_cast<unsigned __int128>(p.den()) << 1);
  return static_cast<std::uint64_t>(t);
}

}  // namespace ramsey
